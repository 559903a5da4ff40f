#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "emptypt/constructive.hpp"
#include "emptypt/extremal.hpp"
#include "emptypt/harness.hpp"
#include "emptypt/search.hpp"

namespace py = pybind11;
using namespace emptypt;

namespace {

using XY = std::pair<std::int64_t, std::int64_t>;

std::vector<Point> to_points(const std::vector<XY>& xy) {
  std::vector<Point> out;
  out.reserve(xy.size());
  for (const auto& [x, y] : xy) out.push_back({x, y});
  return out;
}

std::vector<XY> to_xy(std::span<const Point> pts) {
  std::vector<XY> out;
  for (const Point& p : pts) out.emplace_back(p.x, p.y);
  return out;
}

py::dict pt_dict(const PseudoTriangle& pt, bool empty) {
  py::dict d;
  d["vertices"] = to_xy(pt.polygon.vertices);
  d["corners"] = to_xy(pt.corners);
  py::list chains;
  for (const auto& c : pt.chains) chains.append(to_xy(c));
  d["chains"] = chains;
  d["class"] = to_string(pt.cls);
  d["empty"] = empty;
  return d;
}

py::dict construction_dict(const Construction& c) {
  py::dict d = pt_dict(c.witness.pt, c.witness.empty);
  py::list tags;
  for (const auto& s : c.trace.steps) tags.append(s.tag);
  d["trace"] = tags;
  d["strictly_decreasing"] = c.trace.strictly_decreasing();
  d["oracle_fallback"] = c.oracle_fallback;
  return d;
}

ClaimSpec spec(const std::string& table, bool upper, std::size_t k, std::size_t l, std::size_t n,
               std::size_t trials, std::uint64_t seed, const std::string& fixture) {
  ClaimSpec c;
  if (table == "E") c.type = upper ? ClaimType::EUpper : ClaimType::ELower;
  else if (table == "F") c.type = upper ? ClaimType::FUpper : ClaimType::FLower;
  else throw Error(ErrorKind::Parse, "table must be \"E\" or \"F\"");
  c.k = k;
  c.l = l;
  c.n = n;
  c.trials = trials;
  c.seed = seed;
  c.fixture = fixture;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Holes, convex gons and pseudo-triangles in planar point sets";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("find_k_hole", [](const std::vector<XY>& pts, std::size_t k) -> std::optional<std::vector<XY>> {
    if (auto w = find_k_hole(PointSet(to_points(pts)), k)) return to_xy(w->vertices);
    return std::nullopt;
  }, py::arg("points"), py::arg("k"));

  m.def("find_convex_kgon", [](const std::vector<XY>& pts, std::size_t k) -> std::optional<std::vector<XY>> {
    if (auto w = find_convex_kgon(PointSet(to_points(pts)), k)) return to_xy(w->vertices);
    return std::nullopt;
  }, py::arg("points"), py::arg("k"));

  m.def("find_pseudo_triangle", [](const std::vector<XY>& pts, std::size_t size, bool empty) -> py::object {
    if (auto w = find_empty_pseudo_triangle(PointSet(to_points(pts)), size, empty)) {
      return pt_dict(w->pt, w->empty);
    }
    return py::none();
  }, py::arg("points"), py::arg("size"), py::arg("empty") = true);

  m.def("lambda_convexity", [](const std::vector<XY>& pts) { return lambda_convexity(PointSet(to_points(pts))); });

  m.def("splitter_type", [](const std::vector<XY>& pts, XY p) {
    const auto t = splitter_type(PointSet(to_points(pts)), {p.first, p.second});
    return std::make_tuple(t.x, t.y, t.z);
  });

  m.def("empty_5pt_triangular", [](const std::vector<XY>& pts) {
    return construction_dict(empty_5pt_triangular(PointSet(to_points(pts))));
  });
  m.def("empty_6pt_triangular", [](const std::vector<XY>& pts) {
    return construction_dict(empty_6pt_triangular(PointSet(to_points(pts))));
  });
  m.def("empty_7pt_triangular", [](const std::vector<XY>& pts) {
    return construction_dict(empty_7pt_triangular(PointSet(to_points(pts))));
  });

  m.def("bft_construct", [](int k, int level, std::uint64_t seed) {
    return to_xy(bft_construct({k, level, std::int64_t{1} << 19, seed}).points);
  }, py::arg("k"), py::arg("level"), py::arg("seed") = 0);

  m.def("m_value", &m_value, py::arg("nu"));

  m.def("verify_upper", [](const std::string& table, std::size_t k, std::size_t l, std::size_t n,
                           std::size_t trials, std::uint64_t seed) {
    return to_json(verify_upper(spec(table, true, k, l, n, trials, seed, "")));
  }, py::arg("table"), py::arg("k"), py::arg("l"), py::arg("n"), py::arg("trials") = 1000, py::arg("seed") = 0);

  m.def("verify_lower", [](const std::string& table, std::size_t k, std::size_t l, const std::string& fixture) {
    return to_json(verify_lower(spec(table, false, k, l, 0, 1, 0, fixture)));
  }, py::arg("table"), py::arg("k"), py::arg("l"), py::arg("fixture") = "");

  m.def("verify_property", [](const std::string& name, std::size_t trials, std::uint64_t seed) {
    return to_json(verify_property(name, trials, seed));
  }, py::arg("name"), py::arg("trials") = 500, py::arg("seed") = 0);

  m.def("property_names", &property_names);

  m.def("table_report", [](std::size_t trials, std::size_t slow_trials, std::uint64_t seed,
                           const std::string& fixture_dir) {
    return to_json(table_report({trials, slow_trials, seed, fixture_dir}));
  }, py::arg("trials") = 1000, py::arg("slow_trials") = 100, py::arg("seed") = 0,
     py::arg("fixture_dir") = EMPTYPT_DEFAULT_FIXTURE_DIR);
}
