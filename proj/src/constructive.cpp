#include "emptypt/constructive.hpp"

#include <algorithm>
#include <functional>

namespace emptypt {

bool DescentTrace::strictly_decreasing() const {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i].interior >= steps[i - 1].interior) return false;
  }
  return true;
}

std::vector<PseudoTriangle> pseudo_triangles_on(const std::vector<Point>& vertices) {
  std::vector<PseudoTriangle> out;
  if (vertices.size() < 3 || general_position_violation(vertices)) return out;
  const HullPartition part = convex_hull(vertices);
  if (part.hull.size() != 3) return out;
  const auto& h = part.hull.vertices;
  const std::size_t m = part.interior.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    ChainAssignment asg;
    std::size_t c = code;
    for (const Point& x : part.interior) {
      asg.chains[c % 3].push_back(x);
      c /= 3;
    }
    if (auto pt = assemble_pseudo_triangle(h[0], h[1], h[2], asg)) out.push_back(std::move(*pt));
  }
  return out;
}

namespace {

struct TriHull {
  Point a, b, c;  // counter-clockwise
  std::vector<Point> interior;
};

TriHull triangular_hull(const PointSet& s, std::size_t min_interior, const std::string& op) {
  if (s.size() < 3) throw Error(ErrorKind::TooFewPoints, op + ": needs at least 3 points");
  HullPartition part = convex_hull(s);
  if (part.hull.size() != 3) {
    throw Error(ErrorKind::Precondition, op + ": convex hull is not a triangle");
  }
  if (part.interior.size() < min_interior) {
    throw Error(ErrorKind::Precondition,
                op + ": needs at least " + std::to_string(min_interior) + " interior points");
  }
  // keep the input order of interior points
  std::vector<Point> interior;
  for (const Point& p : s) {
    if (std::find(part.interior.begin(), part.interior.end(), p) != part.interior.end()) {
      interior.push_back(p);
    }
  }
  const auto& h = part.hull.vertices;
  return {h[0], h[1], h[2], std::move(interior)};
}

bool distinct(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::optional<PseudoTriangle> cycle_pt(std::vector<Point> cycle) {
  if (!distinct(cycle)) return std::nullopt;
  return as_pseudo_triangle(std::move(cycle));
}

/// Point on the ray from `from` through `through`, beyond `through`.
Point beyond(const Point& from, const Point& through) {
  return {2 * through.x - from.x, 2 * through.y - from.y};
}

bool in_tri(const Point& x, const Point& a, const Point& b, const Point& c) {
  return strictly_inside_triangle(x, a, b, c);
}

std::vector<Point> filter(std::span<const Point> pts, const std::function<bool(const Point&)>& f) {
  std::vector<Point> out;
  for (const Point& p : pts) {
    if (f(p)) out.push_back(p);
  }
  return out;
}

std::vector<std::array<Point, 3>> labelings(const Point& a, const Point& b, const Point& c) {
  return {{a, b, c}, {b, c, a}, {c, a, b}, {a, c, b}, {c, b, a}, {b, a, c}};
}

/// Vertices of the convex polygon `hull` walked from `from` to `to` along the
/// side that does not pass through `avoid`, endpoints included.
std::vector<Point> hull_path(const Polygon& hull, const Point& from, const Point& to,
                             const Point& avoid) {
  const auto& v = hull.vertices;
  const std::size_t n = v.size();
  const auto i = static_cast<std::size_t>(std::find(v.begin(), v.end(), from) - v.begin());
  const auto j = static_cast<std::size_t>(std::find(v.begin(), v.end(), to) - v.begin());
  if (i == n || j == n) throw Error(ErrorKind::Precondition, "hull path endpoint missing");
  for (int dir : {1, -1}) {
    std::vector<Point> path;
    bool ok = true;
    for (std::size_t k = i;; k = (k + n + static_cast<std::size_t>(dir)) % n) {
      if (v[k] == avoid) {
        ok = false;
        break;
      }
      path.push_back(v[k]);
      if (k == j) break;
    }
    if (ok) return path;
  }
  throw Error(ErrorKind::Precondition, "hull path blocked in both directions");
}

/// Convex chain of hull(pts ∪ {u, w}) from u to w, endpoints excluded.
/// `pts` must lie on one side of line uw.
std::vector<Point> cap_chain(const Point& u, const Point& w, const std::vector<Point>& pts) {
  if (pts.empty()) return {};
  std::vector<Point> all = pts;
  all.push_back(u);
  all.push_back(w);
  const Polygon hull = convex_hull(all).hull;
  // the edge uw is a hull edge; walk the other way round
  const auto& v = hull.vertices;
  const std::size_t n = v.size();
  const auto i = static_cast<std::size_t>(std::find(v.begin(), v.end(), u) - v.begin());
  const int dir = v[(i + 1) % n] == w ? -1 : 1;
  std::vector<Point> chain;
  for (std::size_t k = (i + n + static_cast<std::size_t>(dir)) % n; v[k] != w;
       k = (k + n + static_cast<std::size_t>(dir)) % n) {
    chain.push_back(v[k]);
  }
  return chain;
}

class Builder {
 public:
  Builder(const PointSet& s, std::string op) : s_(s), op_(std::move(op)) {}

  std::size_t interior(const PseudoTriangle& pt) const { return count_inside(pt.polygon, s_.points()); }

  void step(const std::string& tag, const PseudoTriangle& pt) {
    result_.trace.steps.push_back({tag, pt, interior(pt)});
  }

  Construction finish(const PseudoTriangle& pt) {
    result_.witness = PTWitness{pt, is_empty_in(pt.polygon, s_.points())};
    return std::move(result_);
  }

  Construction fallback(std::size_t size, std::optional<PtClass> cls, const std::string& why) {
    result_.diagnostics.push_back({op_, why, s_.vector()});
    result_.oracle_fallback = true;
    const auto w = find_pseudo_triangle(s_, PTQuery{size, true, cls});
    if (!w) {
      throw Error(ErrorKind::Certification, op_ + ": no witness exists for this input");
    }
    step("oracle", w->pt);
    result_.witness = *w;
    return std::move(result_);
  }

  const PointSet& set() const { return s_; }

 private:
  const PointSet& s_;
  std::string op_;
  Construction result_;
};

// -- 6-pseudo-triangles ----------------------------------------------------

/// Standard 6-pseudo-triangle on the hull a, b, c and exactly the three
/// points of `in3`; every vertex is used, so it is empty in those 6 points.
std::optional<std::pair<PseudoTriangle, std::string>> six_on_three(const Point& a0, const Point& b0,
                                                                   const Point& c0,
                                                                   const std::array<Point, 3>& in3) {
  for (const auto& [a, b, c] : labelings(a0, b0, c0)) {
    for (std::size_t qi = 0; qi < 3; ++qi) {
      const Point q = in3[qi];
      const Point x = in3[(qi + 1) % 3], y = in3[(qi + 2) % 3];
      if (in_tri(x, q, b, c) || in_tri(y, q, b, c)) continue;
      const bool ab_x = in_tri(x, q, a, b), ab_y = in_tri(y, q, a, b);
      const bool ac_x = in_tri(x, q, a, c), ac_y = in_tri(y, q, a, c);
      std::vector<std::pair<std::string, std::vector<Point>>> cands;
      if ((ab_x || ab_y) && (ac_x || ac_y)) {
        const Point p = ab_x ? x : y, r = ab_x ? y : x;
        cands = {{"apbqcr", {a, p, b, q, c, r}}, {"arbqcp", {a, r, b, q, c, p}}};
      } else if (!ab_x && !ab_y) {
        const std::vector<Point> two{x, y};
        const auto rr = nearest_angular_neighbor(a, c, ConvexRegion::cone(q, a, c), two);
        if (!rr) continue;
        const Point r = *rr, p = r == x ? y : x;
        const Point alpha = beyond(c, r);
        if (ConvexRegion::cone(a, r, alpha).contains(p)) {
          cands = {{"aprcqb", {a, p, r, c, q, b}}};
        } else {
          cands = {{"arcpbq", {a, r, c, p, b, q}}, {"arcqbp", {a, r, c, q, b, p}}};
        }
      } else {
        continue;  // covered by the mirrored labelling
      }
      for (const auto& [tag, cycle] : cands) {
        const auto pt = cycle_pt(cycle);
        if (!pt || pt->size() != 6) continue;
        std::string route;
        PseudoTriangle st = standardize(*pt, &route);
        if (st.cls == PtClass::Standard) return std::make_pair(st, tag + "+" + route);
      }
    }
  }
  return std::nullopt;
}

bool segment_direct(const PseudoTriangle& pt, const Point& x, const Point& corner) {
  const auto& v = pt.polygon.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& e0 = v[i];
    const Point& e1 = v[(i + 1) % n];
    if (e0 == corner || e1 == corner) continue;
    if (segments_intersect(x, corner, e0, e1)) return false;
  }
  return true;
}

std::vector<Point> replaced(std::vector<Point> cycle, const Point& from, const Point& to) {
  std::replace(cycle.begin(), cycle.end(), from, to);
  return cycle;
}

/// One descent step on a standard pseudo-triangle: returns a standard one of
/// the same size with fewer interior points, and its tag.
using Accept = std::function<bool(const PseudoTriangle&)>;

constexpr std::size_t kExchangePool = 24;

// Points of S that are not vertices of pt: inside pt first, then the rest.
std::vector<Point> exchange_pool(const PseudoTriangle& pt, std::span<const Point> all) {
  std::vector<Point> pool = points_inside(pt.polygon, all);
  for (const Point& x : all) {
    if (std::find(pt.polygon.vertices.begin(), pt.polygon.vertices.end(), x) ==
            pt.polygon.vertices.end() &&
        std::find(pool.begin(), pool.end(), x) == pool.end()) {
      pool.push_back(x);
    }
  }
  return pool;
}

std::optional<std::pair<PseudoTriangle, std::string>> exchange(
    const PseudoTriangle& pt, const std::vector<Point>& inside, std::size_t max_swaps,
    const Accept& accept) {
  const auto& v = pt.polygon.vertices;
  const std::size_t n = v.size();
  const std::size_t limit = std::min<std::size_t>(inside.size(), kExchangePool);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < limit; ++a) {
      std::vector<Point> vs = v;
      vs[i] = inside[a];
      for (auto& cand : pseudo_triangles_on(vs)) {
        if (accept(cand)) return std::make_pair(std::move(cand), std::string("exchange-1"));
      }
    }
  }
  if (max_swaps < 2) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t a = 0; a < limit; ++a) {
        for (std::size_t b = a + 1; b < limit; ++b) {
          std::vector<Point> vs = v;
          vs[i] = inside[a];
          vs[j] = inside[b];
          for (auto& cand : pseudo_triangles_on(vs)) {
            if (accept(cand)) return std::make_pair(std::move(cand), std::string("exchange-2"));
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

// -- empty 5-pseudo-triangle -----------------------------------------------

Construction empty_5pt_triangular(const PointSet& s, std::size_t b_index) {
  const std::string op = "empty_5pt_triangular";
  const TriHull t = triangular_hull(s, 2, op);
  if (b_index > 2) throw Error(ErrorKind::OutOfRange, op + ": hull vertex index must be 0, 1 or 2");
  const std::array<Point, 3> h{t.a, t.b, t.c};
  const Point b = h[b_index], c = h[(b_index + 1) % 3], a = h[(b_index + 2) % 3];
  Builder out(s, op);

  std::vector<Point> radial = t.interior;
  std::sort(radial.begin(), radial.end(), [&](const Point& u, const Point& w) {
    return orientation(b, u, w) == Orientation::CounterClockwise;
  });
  const Point q = radial[0], p = radial[1];

  const Orientation side_a = orientation(b, p, a), side_c = orientation(b, q, c);
  const auto cp = filter(s.points(), [&](const Point& x) {
    return x == b || x == p || orientation(b, p, x) == side_a;
  });
  const auto cq = filter(s.points(), [&](const Point& x) {
    return x == b || x == q || orientation(b, q, x) == side_c;
  });
  std::vector<Point> cycle{b};
  for (const Point& x : hull_path(convex_hull(cp).hull, p, a, b)) cycle.push_back(x);
  for (const Point& x : hull_path(convex_hull(cq).hull, c, q, b)) cycle.push_back(x);

  const auto mountain = cycle_pt(cycle);
  if (!mountain || mountain->cls != PtClass::Mountain || !is_empty_in(mountain->polygon, s.points())) {
    return out.fallback(5, std::nullopt, "hull merge did not give an empty mountain");
  }
  if (mountain->size() == 5) {
    out.step("lemma1-mountain", *mountain);
    return out.finish(*mountain);
  }
  std::vector<std::string> routes;
  const PseudoTriangle five = shorten_mountain(*mountain, 5, s.points(), &routes);
  std::string tag = "lemma1-mountain+shorten";
  for (const auto& r : routes) tag += ":" + r;
  out.step(tag, five);
  return out.finish(five);
}

// -- empty standard 6-pseudo-triangle --------------------------------------

Construction empty_6pt_triangular(const PointSet& s) {
  const std::string op = "empty_6pt_triangular";
  const TriHull t = triangular_hull(s, 3, op);
  Builder out(s, op);

  const std::array<Point, 3> first{t.interior[0], t.interior[1], t.interior[2]};
  auto base = six_on_three(t.a, t.b, t.c, first);
  if (!base) {
    std::vector<Point> six{t.a, t.b, t.c, first[0], first[1], first[2]};
    for (auto& pt : pseudo_triangles_on(six)) {
      if (pt.cls == PtClass::Standard) {
        base = std::make_pair(pt, std::string("exhaustive"));
        out.step("lemma2-base-exchange", pt);
        break;
      }
    }
    if (!base) return out.fallback(6, PtClass::Standard, "no standard 6-gon on hull + 3 points");
  } else {
    out.step("lemma2-base:" + base->second, base->first);
  }

  PseudoTriangle cur = base->first;
  for (std::size_t guard = 0; guard <= s.size(); ++guard) {
    const auto inside = points_inside(cur.polygon, s.points());
    if (inside.empty()) return out.finish(cur);
    const std::size_t count = inside.size();
    const Accept fewer = [&](const PseudoTriangle& pt) {
      return pt.size() == 6 && pt.cls == PtClass::Standard && out.interior(pt) < count;
    };

    std::optional<std::pair<PseudoTriangle, std::string>> next;
    for (const Point& x : inside) {
      std::array<bool, 3> direct{};
      for (std::size_t k = 0; k < 3; ++k) direct[k] = segment_direct(cur, x, cur.corners[k]);
      std::vector<std::pair<std::string, std::vector<Point>>> cands;
      for (std::size_t k = 0; k < 3; ++k) {
        // segments to both ends of chain k are free: x replaces its reflex vertex
        if (direct[k] && direct[(k + 1) % 3]) {
          cands.push_back({"reflex", replaced(cur.polygon.vertices, cur.chains[k][1], x)});
        }
      }
      for (std::size_t k = 0; k < 3; ++k) {
        // segments to the other two corners are blocked: x replaces corner k
        if (!direct[(k + 1) % 3] && !direct[(k + 2) % 3]) {
          cands.push_back({"corner", replaced(cur.polygon.vertices, cur.corners[k], x)});
        }
      }
      for (const auto& [tag, cycle] : cands) {
        const auto pt = cycle_pt(cycle);
        if (pt && fewer(*pt)) {
          next = std::make_pair(*pt, "lemma2-descent:" + tag);
          break;
        }
      }
      if (next) break;
    }
    if (!next) {
      next = exchange(cur, inside, 2, fewer);
      if (!next) next = exchange(cur, exchange_pool(cur, s.points()), 2, fewer);
      if (next) next->second = "lemma2-" + next->second;
    }
    if (!next) return out.fallback(6, PtClass::Standard, "no descent step applies");
    cur = next->first;
    out.step(next->second, cur);
  }
  return out.fallback(6, PtClass::Standard, "descent did not terminate");
}

// -- standard 7-pseudo-triangle --------------------------------------------

namespace {

std::optional<PseudoTriangle> as_standard7(const std::vector<Point>& cycle, std::string* tag) {
  const auto pt = cycle_pt(cycle);
  if (!pt || pt->size() != 7) return std::nullopt;
  if (pt->cls == PtClass::Standard) return pt;
  std::string route;
  PseudoTriangle st = standardize(*pt, &route);
  if (st.cls != PtClass::Standard) return std::nullopt;
  *tag += "+standardize:" + route;
  return st;
}

std::optional<std::pair<PseudoTriangle, std::string>> seven_splitter(const Point& a0, const Point& b0,
                                                                     const Point& c0,
                                                                     const std::vector<Point>& in5) {
  for (const Point& p : in5) {
    for (const auto& [a, b, c] : labelings(a0, b0, c0)) {
      std::vector<Point> bc, ab, ca;
      for (const Point& x : in5) {
        if (x == p) continue;
        if (in_tri(x, p, b, c)) bc.push_back(x);
        else if (in_tri(x, p, a, b)) ab.push_back(x);
        else ca.push_back(x);
      }
      if (bc.size() != 2 || ab.size() != 1 || ca.size() != 1) continue;
      const Point s = ab[0], t = ca[0];
      const auto qq = nearest_angular_neighbor(b, c, ConvexRegion::triangle(p, b, c), bc);
      if (!qq) continue;
      const Point q = *qq, r = bc[0] == q ? bc[1] : bc[0];
      const bool r1 = ConvexRegion::cone(b, q, beyond(c, q)).contains(r);
      const bool r2 = ConvexRegion::cone(c, q, beyond(b, q)).contains(r);
      const bool beta_pc = ConvexRegion::cone(beyond(a, p), p, c).contains(r);
      std::vector<std::pair<std::string, std::vector<Point>>> cands;
      const std::pair<std::string, std::vector<Point>> c1{"asbqrcp", {a, s, b, q, r, c, p}},
          c2{"asbrqcp", {a, s, b, r, q, c, p}}, c3{"asbqcrp", {a, s, b, q, c, r, p}},
          c4{"aprbqct", {a, p, r, b, q, c, t}};
      if (r1 || r2) cands = {c1, c2, c3, c4};
      else if (beta_pc) cands = {c3, c1, c2, c4};
      else cands = {c4, c1, c2, c3};
      for (auto [tag, cycle] : cands) {
        tag = "lemma3-splitter:" + tag;
        if (auto pt = as_standard7(cycle, &tag)) return std::make_pair(*pt, tag);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<PseudoTriangle, std::string>> seven_from_six(const Point& a0, const Point& b0,
                                                                     const Point& c0,
                                                                     const std::vector<Point>& in5) {
  const auto base = six_on_three(a0, b0, c0, {in5[0], in5[1], in5[2]});
  if (!base) return std::nullopt;
  PseudoTriangle cur = base->first;
  for (std::size_t guard = 0; guard < 8; ++guard) {
    const auto inside = points_inside(cur.polygon, in5);
    if (!inside.empty()) {
      const Point x = inside[0];
      for (std::size_t k = 0; k < 3; ++k) {
        ChainAssignment asg;
        for (std::size_t i = 0; i < 3; ++i) {
          asg.chains[i].assign(cur.chains[i].begin() + 1, cur.chains[i].end() - 1);
        }
        asg.chains[k].push_back(x);
        if (auto pt = assemble_pseudo_triangle(cur.corners[0], cur.corners[1], cur.corners[2], asg)) {
          std::string tag = "lemma3-case2:insert";
          std::vector<Point> cyc = pt->polygon.vertices;
          if (auto st = as_standard7(cyc, &tag)) return std::make_pair(*st, tag);
        }
      }
      bool shrunk = false;
      for (std::size_t k = 0; k < 3 && !shrunk; ++k) {
        const auto pt = cycle_pt(replaced(cur.polygon.vertices, cur.chains[k][1], x));
        if (pt && pt->cls == PtClass::Standard && pt->corners == cur.corners &&
            count_inside(pt->polygon, in5) < inside.size()) {
          cur = *pt;
          shrunk = true;
        }
      }
      if (!shrunk) return std::nullopt;
      continue;
    }
    // empty among the five: the other two points sit in the pockets
    std::vector<Point> used(cur.polygon.vertices.begin(), cur.polygon.vertices.end());
    for (const Point& x : in5) {
      if (std::find(used.begin(), used.end(), x) != used.end()) continue;
      for (std::size_t k = 0; k < 3; ++k) {
        const Point b = cur.corners[k], c = cur.corners[(k + 1) % 3], a = cur.corners[(k + 2) % 3];
        const Point q = cur.chains[k][1], r = cur.chains[(k + 1) % 3][1],
                    p = cur.chains[(k + 2) % 3][1];
        if (!in_tri(x, q, b, c)) continue;
        const bool qac_empty =
            std::none_of(in5.begin(), in5.end(), [&](const Point& y) { return in_tri(y, q, a, c); });
        std::vector<std::pair<std::string, std::vector<Point>>> cands{
            {"apbscqr", {a, p, b, x, c, q, r}}, {"apqbscr", {a, p, q, b, x, c, r}}};
        if (!qac_empty) std::swap(cands[0], cands[1]);
        cands.push_back({"apbqscr", {a, p, b, q, x, c, r}});
        cands.push_back({"apbsqcr", {a, p, b, x, q, c, r}});
        for (auto [tag, cycle] : cands) {
          tag = "lemma3-case1:" + tag;
          if (auto pt = as_standard7(cycle, &tag)) return std::make_pair(*pt, tag);
        }
      }
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Construction standard_7pt_triangular(const PointSet& s) {
  const std::string op = "standard_7pt_triangular";
  const TriHull t = triangular_hull(s, 5, op);
  Builder out(s, op);
  const std::vector<Point> in5(t.interior.begin(), t.interior.begin() + 5);
  auto got = seven_splitter(t.a, t.b, t.c, in5);
  if (!got) got = seven_from_six(t.a, t.b, t.c, in5);
  if (!got) {
    std::vector<Point> eight{t.a, t.b, t.c};
    eight.insert(eight.end(), in5.begin(), in5.end());
    for (std::size_t skip = 0; skip < 5 && !got; ++skip) {
      std::vector<Point> seven;
      for (std::size_t i = 0; i < eight.size(); ++i) {
        if (i != skip + 3) seven.push_back(eight[i]);
      }
      for (auto& pt : pseudo_triangles_on(seven)) {
        if (pt.cls == PtClass::Standard) {
          got = std::make_pair(pt, std::string("lemma3-exchange"));
          break;
        }
      }
    }
  }
  if (!got) return out.fallback(7, PtClass::Standard, "no standard 7-gon found among 5 points");
  out.step(got->second, got->first);
  return out.finish(got->first);
}

// -- empty 7-pseudo-triangle -----------------------------------------------

namespace {

struct Labels {
  Point a0, p, b0, q, r, c0, s;
};

// The chain with two interior points becomes C(b0, c0).
Labels label_standard7(const PseudoTriangle& pt) {
  std::size_t k = 0;
  while (pt.chains[k].size() != 4) ++k;
  Labels l;
  l.b0 = pt.corners[k];
  l.c0 = pt.corners[(k + 1) % 3];
  l.a0 = pt.corners[(k + 2) % 3];
  l.q = pt.chains[k][1];
  l.r = pt.chains[k][2];
  l.s = pt.chains[(k + 1) % 3][1];
  l.p = pt.chains[(k + 2) % 3][1];
  return l;
}

Labels mirror(const Labels& l) { return {l.a0, l.s, l.c0, l.r, l.q, l.b0, l.p}; }

struct Candidate {
  std::string tag;
  std::vector<Point> cycle;
  bool mountain = false;  // empty mountain escape, shortened to 7
};

// I(qr beta) with beta the meeting point of rays b0->q and c0->r.
bool in_qr_beta(const Labels& l, const Point& x) {
  const Orientation o = orientation(l.q, l.r, x);
  return o != Orientation::Collinear && o != orientation(l.q, l.r, l.b0) &&
         orientation(l.b0, l.q, x) == orientation(l.b0, l.q, l.r) &&
         orientation(l.c0, l.r, x) == orientation(l.c0, l.r, l.q);
}

// I(b0 beta r).
bool in_b0_beta_r(const Labels& l, const Point& x) {
  return orientation(l.b0, l.q, x) == orientation(l.b0, l.q, l.r) &&
         orientation(l.c0, l.r, x) == orientation(l.c0, l.r, l.b0) &&
         orientation(l.b0, l.r, x) == orientation(l.b0, l.r, l.q);
}

std::vector<Candidate> seven_candidates(const Labels& l,
                                           const std::vector<Point>& inside,
                                           std::span<const Point> all) {
  const auto& [a0, p, b0, q, r, c0, s] = l;
  const auto cone = ConvexRegion::cone(p, a0, s);
  const bool in_q = cone.contains(q), in_r = cone.contains(r);
  const std::string cs = !in_q && !in_r ? "1" : in_q && !in_r ? "2" : in_q && in_r ? "3" : "x";

  std::vector<Candidate> one, two, three, escapes;
  for (const Point& x : inside) {
    if (in_qr_beta(l, x)) one.push_back({"1:qr-beta", {a0, p, q, x, r, c0, s}});
    one.push_back({"1:c0", {a0, p, q, r, c0, x, s}});
    one.push_back({"1:b0", {a0, p, x, b0, q, r, s}});
    two.push_back({"2:R", {a0, p, x, b0, q, r, s}});
    two.push_back({"2.1", {a0, p, b0, q, r, x, s}});
    two.push_back({"2.2", {a0, p, b0, q, x, c0, s}});
    two.push_back({"2.3", {a0, q, b0, r, c0, x, s}});
    three.push_back({"3.1", {a0, q, b0, r, c0, x, s}});
  }

  // Z: hull of I(b0 q r) with b0 and r
  const auto ys = filter(all, [&](const Point& x) { return in_tri(x, b0, q, r); });
  const auto ychain = cap_chain(r, b0, ys);  // y1 next to r
  const auto x0cands = filter(inside, [&](const Point& x) {
    return orientation(b0, q, x) == orientation(b0, q, a0);
  });
  const auto x0 = nearest_angular_neighbor(b0, q, ConvexRegion::whole_plane(), x0cands);
  if (ychain.size() >= 2 && x0) {
    std::vector<Point> cyc{b0, q, *x0, c0, r};
    cyc.insert(cyc.end(), ychain.begin(), ychain.end());
    escapes.push_back({"2.3.1", cyc, true});
  }
  if (ychain.size() == 1) {
    for (const Point& x : inside) two.push_back({"2.3.2", {b0, ychain[0], r, c0, x, s, q}});
  }

  // Z': hull of I(qr beta) with q and r
  const auto zs = filter(all, [&](const Point& x) { return in_qr_beta(l, x); });
  for (const Point& z : zs) {
    for (const Point& x : inside) {
      if (x == z) continue;
      three.push_back({"3.2:R1", {a0, p, x, b0, q, z, r}});
      three.push_back({"3.2:R2", {a0, q, z, r, c0, x, s}});
    }
  }
  const auto uchain = cap_chain(q, r, zs);
  if (uchain.size() >= 2) {
    std::vector<Point> cyc{a0, p, b0, q};
    cyc.insert(cyc.end(), uchain.begin(), uchain.end());
    cyc.push_back(r);
    escapes.push_back({"3.2.1", cyc, true});
  }
  if (uchain.size() == 1) {
    const Point u1 = uchain[0];
    three.push_back({"3.2.2", {a0, q, b0, u1, r, c0, s}});
    const auto vs = filter(all, [&](const Point& x) { return in_b0_beta_r(l, x); });
    const auto vchain = cap_chain(b0, r, vs);  // v1 next to b0
    if (vchain.size() >= 3) {
      std::vector<Point> cyc{a0, q, b0};
      cyc.insert(cyc.end(), vchain.begin(), vchain.end());
      cyc.push_back(r);
      escapes.push_back({"3.2.2:Z1", cyc, true});
    }
    if (vchain.size() == 2) {
      const Point v1 = vchain[0] == u1 ? vchain[1] : vchain[0];
      three.push_back({"3.2.2:a", {a0, q, v1, u1, r, c0, s}});
      three.push_back({"3.2.2:b", {a0, v1, b0, u1, r, c0, s}});
      const auto ws = filter(all, [&](const Point& x) { return in_tri(x, b0, u1, v1); });
      const auto xx = nearest_angular_neighbor(a0, u1, ConvexRegion::whole_plane(), ws);
      if (xx) {
        std::vector<Point> ys2 = ws;
        ys2.push_back(b0);
        for (const Point& y : ys2) {
          if (y != *xx) three.push_back({"3.2.2:c", {a0, *xx, y, u1, r, c0, s}});
        }
      }
    }
  }

  std::vector<Candidate> out;
  auto add = [&](std::vector<Candidate>& v, const std::string& prefix) {
    for (auto& c : v) {
      c.tag = prefix + c.tag;
      out.push_back(std::move(c));
    }
    v.clear();
  };
  const std::string pre = "thm3-case";
  if (cs == "1") add(one, pre);
  if (cs == "2") add(two, pre);
  if (cs == "3") add(three, pre);
  add(escapes, pre);
  add(one, pre);
  add(two, pre);
  add(three, pre);
  return out;
}

}  // namespace

Construction empty_7pt_triangular(const PointSet& s) {
  const std::string op = "empty_7pt_triangular";
  triangular_hull(s, 5, op);
  Construction start = standard_7pt_triangular(s);
  if (start.oracle_fallback) return start;
  Builder out(s, op);
  out.step(start.trace.steps.back().tag, start.witness.pt);
  PseudoTriangle cur = start.witness.pt;

  for (std::size_t guard = 0; guard <= s.size(); ++guard) {
    const auto inside = points_inside(cur.polygon, s.points());
    if (inside.empty()) return out.finish(cur);
    const std::size_t count = inside.size();

    std::optional<std::pair<PseudoTriangle, std::string>> next;
    const Labels base = label_standard7(cur);
    for (const Labels& l : {base, mirror(base)}) {
      for (auto& cand : seven_candidates(l, inside, s.points())) {
        const auto pt = cycle_pt(cand.cycle);
        if (!pt) continue;
        if (cand.mountain) {
          if (pt->cls != PtClass::Mountain || pt->size() < 7 || !is_empty_in(pt->polygon, s.points())) {
            continue;
          }
          if (pt->size() == 7) {
            next = std::make_pair(*pt, cand.tag);
          } else {
            std::vector<std::string> routes;
            std::string tag = cand.tag + "+shorten";
            const PseudoTriangle seven = shorten_mountain(*pt, 7, s.points(), &routes);
            for (const auto& r : routes) tag += ":" + r;
            next = std::make_pair(seven, tag);
          }
          break;
        }
        if (pt->size() != 7) continue;
        const std::size_t ic = out.interior(*pt);
        if (ic >= count) continue;
        if (ic == 0 || pt->cls == PtClass::Standard) {
          next = std::make_pair(*pt, cand.tag);
          break;
        }
        std::string route;
        PseudoTriangle st = standardize(*pt, &route);
        if (st.cls == PtClass::Standard && out.interior(st) < count) {
          next = std::make_pair(st, cand.tag + "+standardize:" + route);
          break;
        }
      }
      if (next) break;
    }
    if (!next) {
      const Accept fewer = [&](const PseudoTriangle& pt) {
        if (pt.size() != 7) return false;
        const std::size_t ic = out.interior(pt);
        return ic < count && (ic == 0 || pt.cls == PtClass::Standard);
      };
      next = exchange(cur, inside, 2, fewer);
      if (!next) next = exchange(cur, exchange_pool(cur, s.points()), 2, fewer);
      if (next) next->second = "thm3-" + next->second;
    }
    if (!next) return out.fallback(7, std::nullopt, "no descent case applies");
    cur = next->first;
    out.step(next->second, cur);
  }
  return out.fallback(7, std::nullopt, "descent did not terminate");
}

}  // namespace emptypt
