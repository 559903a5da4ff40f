#include "emptypt/pseudo.hpp"

#include <algorithm>

namespace emptypt {

const char* to_string(PtClass cls) {
  switch (cls) {
    case PtClass::Triangle: return "triangle";
    case PtClass::Standard: return "standard";
    case PtClass::Mountain: return "mountain";
    case PtClass::Fan: return "fan";
  }
  return "unknown";
}

std::optional<PtClass> pt_class_from_string(const std::string& name) {
  if (name == "triangle") return PtClass::Triangle;
  if (name == "standard") return PtClass::Standard;
  if (name == "mountain") return PtClass::Mountain;
  if (name == "fan") return PtClass::Fan;
  return std::nullopt;
}

namespace {

bool point_on_segment(const Point& p, const Point& q, const Point& x) {
  return orientation(p, q, x) == Orientation::Collinear && std::min(p.x, q.x) <= x.x &&
         x.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= x.y && x.y <= std::max(p.y, q.y);
}

}  // namespace

bool is_simple(const Polygon& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (polygon[i] == polygon[j]) return false;
    }
  }
  if (signed_area2(polygon) == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    // Adjacent edge folding back onto this one.
    const Point& c = polygon[(i + 2) % n];
    if (point_on_segment(a, b, c) || point_on_segment(b, c, a)) return false;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap-around
      if (segments_intersect(a, b, polygon[j], polygon[(j + 1) % n])) return false;
    }
  }
  return true;
}

Polygon orient_ccw(Polygon polygon) {
  if (signed_area2(polygon) < 0) {
    std::reverse(polygon.vertices.begin() + 1, polygon.vertices.end());
  }
  return polygon;
}

Classification classify_polygon(const Polygon& polygon) {
  if (!is_simple(polygon)) {
    throw Error(ErrorKind::NonSimple, "polygon is not simple");
  }
  if (signed_area2(polygon) < 0) {
    throw Error(ErrorKind::Precondition, "polygon must be counter-clockwise");
  }
  const std::size_t n = polygon.size();
  std::vector<std::size_t> convex;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = polygon[(i + n - 1) % n];
    const Point& next = polygon[(i + 1) % n];
    if (orientation(prev, polygon[i], next) == Orientation::CounterClockwise) {
      convex.push_back(i);
    }
  }

  Classification out;
  out.convex_vertices = convex.size();
  if (convex.size() == n && n >= 4) {
    out.kind = PolygonKind::Convex;
    return out;
  }
  if (convex.size() != 3) {
    out.kind = PolygonKind::Other;
    return out;
  }

  PseudoTriangle pt;
  pt.polygon = polygon;
  std::rotate(pt.polygon.vertices.begin(),
              pt.polygon.vertices.begin() + static_cast<std::ptrdiff_t>(convex[0]),
              pt.polygon.vertices.end());
  for (std::size_t k = 0; k < 3; ++k) {
    pt.corners[k] = polygon[convex[k]];
    const std::size_t from = convex[k];
    const std::size_t to = convex[(k + 1) % 3] + (k == 2 ? n : 0);
    for (std::size_t i = from; i <= to; ++i) pt.chains[k].push_back(polygon[i % n]);
  }
  std::size_t single = 0;
  for (std::size_t k = 0; k < 3; ++k) single += pt.chains[k].size() == 2 ? 1 : 0;
  switch (single) {
    case 0: pt.cls = PtClass::Standard; break;
    case 1: pt.cls = PtClass::Mountain; break;
    case 2: pt.cls = PtClass::Fan; break;
    default: pt.cls = PtClass::Triangle; break;
  }
  if (pt.cls == PtClass::Fan) {
    // The apex closes one single-edge chain and opens the next.
    for (std::size_t k = 0; k < 3; ++k) {
      if (pt.chains[k].size() == 2 && pt.chains[(k + 2) % 3].size() == 2) pt.apex = pt.corners[k];
    }
  }
  out.kind = PolygonKind::PseudoTriangle;
  out.pseudo_triangle = std::move(pt);
  return out;
}

std::optional<PseudoTriangle> as_pseudo_triangle(std::vector<Point> cycle) {
  Polygon polygon{std::move(cycle)};
  if (!is_simple(polygon)) return std::nullopt;
  polygon = orient_ccw(std::move(polygon));
  // Start the cycle at a convex vertex so corners[0] is the first vertex.
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(polygon.at_cyclic(static_cast<std::ptrdiff_t>(i) - 1), polygon[i],
                    polygon.at_cyclic(static_cast<std::ptrdiff_t>(i) + 1)) ==
        Orientation::CounterClockwise) {
      std::rotate(polygon.vertices.begin(), polygon.vertices.begin() + static_cast<std::ptrdiff_t>(i),
                  polygon.vertices.end());
      break;
    }
  }
  Classification c = classify_polygon(polygon);
  if (c.kind != PolygonKind::PseudoTriangle) return std::nullopt;
  return std::move(c.pseudo_triangle);
}

std::optional<PseudoTriangle> assemble_pseudo_triangle(const Point& a, const Point& b,
                                                       const Point& c,
                                                       const ChainAssignment& assignment) {
  if (orientation(a, b, c) == Orientation::Collinear) {
    throw Error(ErrorKind::CollinearCorners, "pseudo-triangle corners are collinear");
  }
  std::array<Point, 3> k{a, b, c};
  std::array<std::vector<Point>, 3> chains = assignment.chains;
  if (orientation(a, b, c) == Orientation::Clockwise) {
    // (a, c, b): C(a,c) was C(c,a), C(c,b) was C(b,c), C(b,a) was C(a,b).
    k = {a, c, b};
    std::swap(chains[0], chains[2]);
  }
  std::vector<Point> seen;
  for (const auto& chain : chains) {
    for (const Point& p : chain) {
      if (!strictly_inside_triangle(p, k[0], k[1], k[2])) return std::nullopt;
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) return std::nullopt;
      seen.push_back(p);
    }
  }

  std::vector<Point> cycle;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& from = k[i];
    std::vector<Point> chain = chains[i];
    // Walking from -> to along a reflex chain turns clockwise, so the chain
    // points appear in clockwise angular order around `from`.
    std::sort(chain.begin(), chain.end(), [&](const Point& p, const Point& q) {
      return orientation(from, p, q) == Orientation::Clockwise;
    });
    cycle.push_back(from);
    cycle.insert(cycle.end(), chain.begin(), chain.end());
  }
  Polygon polygon{std::move(cycle)};
  if (!is_simple(polygon)) return std::nullopt;
  Classification cls = classify_polygon(polygon);
  if (cls.kind != PolygonKind::PseudoTriangle) return std::nullopt;
  PseudoTriangle& pt = *cls.pseudo_triangle;
  if (pt.corners != k) return std::nullopt;
  return std::move(pt);
}

bool strictly_inside(const Polygon& polygon, const Point& x) {
  const std::size_t n = polygon.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& u = polygon[i];
    const Point& v = polygon[(i + 1) % n];
    if (point_on_segment(u, v, x)) return false;
    if ((u.y > x.y) != (v.y > x.y)) {
      const std::int64_t c = cross(u, v, x);
      if (v.y > u.y ? c > 0 : c < 0) inside = !inside;
    }
  }
  return inside;
}

bool is_empty_in(const Polygon& polygon, std::span<const Point> points) {
  for (const Point& p : points) {
    if (strictly_inside(polygon, p)) return false;
  }
  return true;
}

std::size_t count_inside(const Polygon& polygon, std::span<const Point> points) {
  std::size_t n = 0;
  for (const Point& p : points) n += strictly_inside(polygon, p) ? 1 : 0;
  return n;
}

std::vector<Point> points_inside(const Polygon& polygon, std::span<const Point> points) {
  std::vector<Point> out;
  for (const Point& p : points) {
    if (strictly_inside(polygon, p)) out.push_back(p);
  }
  return out;
}

namespace {

std::vector<Point> interior_of(const std::vector<Point>& chain) {
  return {chain.begin() + 1, chain.end() - 1};
}

std::vector<Point> reversed(std::vector<Point> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

/// Concatenates corner/chain-interior pieces into a cycle.
std::vector<Point> cycle_of(std::initializer_list<std::vector<Point>> pieces) {
  std::vector<Point> out;
  for (const auto& piece : pieces) out.insert(out.end(), piece.begin(), piece.end());
  return out;
}

bool same_vertex_set(const Polygon& a, const Polygon& b) {
  std::vector<Point> x = a.vertices;
  std::vector<Point> y = b.vertices;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

/// Mountain labelling: corners b, c share the single-edge chain, a is the
/// third corner, p runs along C(a,b) from a, q along C(a,c) from a.
struct MountainView {
  Point a, b, c;
  std::vector<Point> p;
  std::vector<Point> q;
};

MountainView view_mountain(const PseudoTriangle& pt) {
  std::size_t t = 0;
  while (pt.chains[t].size() != 2) ++t;
  MountainView m;
  m.b = pt.corners[t];
  m.c = pt.corners[(t + 1) % 3];
  m.a = pt.corners[(t + 2) % 3];
  m.p = interior_of(pt.chains[(t + 2) % 3]);            // a .. b
  m.q = reversed(interior_of(pt.chains[(t + 1) % 3]));  // a .. c after reversal
  return m;
}

/// Searches all chain assignments of the non-corner vertices for a
/// pseudo-triangle of class `want` on the same corners.
std::optional<PseudoTriangle> exhaustive_relabel(const PseudoTriangle& pt, PtClass want) {
  std::vector<Point> rest;
  for (const Point& v : pt.polygon.vertices) {
    if (std::find(pt.corners.begin(), pt.corners.end(), v) == pt.corners.end()) rest.push_back(v);
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < rest.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    ChainAssignment asg;
    std::size_t c = code;
    for (const Point& v : rest) {
      asg.chains[c % 3].push_back(v);
      c /= 3;
    }
    auto cand = assemble_pseudo_triangle(pt.corners[0], pt.corners[1], pt.corners[2], asg);
    if (cand && cand->cls == want) return cand;
  }
  return std::nullopt;
}

}  // namespace

PseudoTriangle standardize(const PseudoTriangle& pt, std::string* route) {
  auto set_route = [&](const char* r) {
    if (route) *route = r;
  };
  if (pt.cls == PtClass::Standard) {
    set_route("identity");
    return pt;
  }
  if (pt.size() < 6) {
    throw Error(ErrorKind::OutOfRange, "standardize needs at least 6 vertices");
  }
  if (pt.cls != PtClass::Mountain && pt.cls != PtClass::Fan) {
    throw Error(ErrorKind::ClassMismatch, "standardize expects a mountain or a fan");
  }

  std::optional<PseudoTriangle> out;
  const char* rule = "";
  if (pt.cls == PtClass::Mountain) {
    const MountainView m = view_mountain(pt);
    const std::size_t i = m.p.size();
    const std::size_t j = m.q.size();
    if (i > 1 && j > 1) {
      std::vector<Point> both = m.p;
      both.insert(both.end(), m.q.begin(), m.q.end());
      const auto s = nearest_neighbor_to_segment(m.b, m.c, ConvexRegion::whole_plane(), both);
      rule = "mountain-nearest";
      if (s == m.p.back()) {
        out = as_pseudo_triangle(cycle_of({{m.a},
                                           {m.p.begin(), m.p.end() - 1},
                                           {m.b, m.p.back(), m.c},
                                           reversed(m.q)}));
      } else if (s == m.q.back()) {
        out = as_pseudo_triangle(
            cycle_of({{m.a}, m.p, {m.b, m.q.back(), m.c}, reversed({m.q.begin(), m.q.end() - 1})}));
      }
    } else if (i == 1) {
      const ConvexRegion cone = ConvexRegion::cone(m.p[0], m.b, m.c);
      const bool hit = std::any_of(m.q.begin(), m.q.end(), [&](const Point& x) { return cone.contains(x); });
      if (hit) {
        rule = "mountain-cone";
        out = as_pseudo_triangle(cycle_of(
            {{m.a, m.p[0], m.b, m.q.back(), m.c}, reversed({m.q.begin(), m.q.end() - 1})}));
      } else {
        rule = "mountain-cone-else";
        out = as_pseudo_triangle(
            cycle_of({{m.a, m.q.front(), m.b, m.p[0], m.c}, reversed({m.q.begin() + 1, m.q.end()})}));
      }
    } else {
      // j == 1: mirror image of the case above.
      const ConvexRegion cone = ConvexRegion::cone(m.q[0], m.c, m.b);
      const bool hit = std::any_of(m.p.begin(), m.p.end(), [&](const Point& x) { return cone.contains(x); });
      if (hit) {
        rule = "mountain-cone";
        out = as_pseudo_triangle(
            cycle_of({{m.a}, {m.p.begin(), m.p.end() - 1}, {m.b, m.p.back(), m.c, m.q[0]}}));
      } else {
        rule = "mountain-cone-else";
        out = as_pseudo_triangle(
            cycle_of({{m.a}, {m.p.begin() + 1, m.p.end()}, {m.b, m.q[0], m.c, m.p.front()}}));
      }
    }
  } else {
    // Fan: the apex sits between two single-edge chains; the long chain
    // b, p1..pi, c donates its first and last points to the short sides.
    std::size_t t = 0;
    while (pt.chains[t].size() == 2) ++t;
    const Point b = pt.corners[t];
    const Point c = pt.corners[(t + 1) % 3];
    const Point a = pt.corners[(t + 2) % 3];
    const std::vector<Point> p = interior_of(pt.chains[t]);
    rule = "fan";
    out = as_pseudo_triangle(
        cycle_of({{b}, {p.begin() + 1, p.end() - 1}, {c, p.back(), a, p.front()}}));
  }

  if (out && out->cls == PtClass::Standard && same_vertex_set(out->polygon, pt.polygon)) {
    set_route(rule);
    return *out;
  }
  auto fallback = exhaustive_relabel(pt, PtClass::Standard);
  if (!fallback) {
    throw Error(ErrorKind::Degenerate, "no standard pseudo-triangle on this vertex set");
  }
  set_route("exhaustive");
  return *fallback;
}

namespace {

bool expected_class(const PseudoTriangle& pt, std::size_t size) {
  if (pt.size() != size) return false;
  if (size == 3) return pt.cls == PtClass::Triangle;
  if (size == 4) return pt.cls == PtClass::Fan;
  return pt.cls == PtClass::Mountain;
}

std::vector<Point> without(const std::vector<Point>& cycle, const Point& drop) {
  std::vector<Point> out;
  for (const Point& v : cycle) {
    if (v != drop) out.push_back(v);
  }
  return out;
}

/// One reduction step of an empty mountain (or a 4-vertex fan) to a
/// pseudo-triangle with one vertex fewer.
PseudoTriangle shorten_once(const PseudoTriangle& pt, std::span<const Point> ambient,
                            std::string& route) {
  const std::size_t want = pt.size() - 1;
  const std::vector<Point>& cycle = pt.polygon.vertices;
  auto accept = [&](const std::optional<PseudoTriangle>& cand) {
    return cand && expected_class(*cand, want) && is_empty_in(cand->polygon, ambient);
  };

  std::optional<PseudoTriangle> cand;
  if (pt.cls == PtClass::Fan && pt.size() == 4) {
    // Drop a non-apex corner; the remaining triangle is half of the fan.
    for (const Point& k : pt.corners) {
      if (k == *pt.apex) continue;
      cand = as_pseudo_triangle(without(cycle, k));
      if (accept(cand)) {
        route = "fan-split";
        return *cand;
      }
    }
  } else if (pt.cls == PtClass::Mountain) {
    const MountainView m = view_mountain(pt);
    const std::size_t i = m.p.size();
    const std::size_t j = m.q.size();
    Point drop{};
    if (i > 1 && j > 1) {
      std::vector<Point> both = m.p;
      both.insert(both.end(), m.q.begin(), m.q.end());
      const auto s = nearest_neighbor_to_segment(m.b, m.c, ConvexRegion::whole_plane(), both);
      drop = (s == m.p.back()) ? m.b : m.c;
      route = "nearest";
    } else if (i == 1) {
      const ConvexRegion cone = ConvexRegion::cone(m.p[0], m.b, m.c);
      drop = cone.contains(m.q.back()) ? m.c : m.a;
      route = cone.contains(m.q.back()) ? "cone" : "cone-else";
    } else {
      const ConvexRegion cone = ConvexRegion::cone(m.q[0], m.c, m.b);
      drop = cone.contains(m.p.back()) ? m.b : m.a;
      route = cone.contains(m.p.back()) ? "cone" : "cone-else";
    }
    cand = as_pseudo_triangle(without(cycle, drop));
    if (accept(cand)) return *cand;
  }

  for (const Point& v : cycle) {
    cand = as_pseudo_triangle(without(cycle, v));
    if (accept(cand)) {
      route = "exhaustive";
      return *cand;
    }
  }
  throw Error(ErrorKind::Degenerate, "no empty sub-pseudo-triangle one vertex smaller");
}

}  // namespace

PseudoTriangle shorten_mountain(const PseudoTriangle& pt, std::size_t m,
                                std::span<const Point> ambient,
                                std::vector<std::string>* routes) {
  if (pt.cls != PtClass::Mountain) {
    throw Error(ErrorKind::ClassMismatch, "shorten_mountain expects a mountain");
  }
  if (m < 3 || m >= pt.size()) {
    throw Error(ErrorKind::OutOfRange, "target size must satisfy 3 <= m < size");
  }
  if (!is_empty_in(pt.polygon, ambient)) {
    throw Error(ErrorKind::Precondition, "mountain is not empty in the ambient set");
  }
  PseudoTriangle cur = pt;
  while (cur.size() > m) {
    std::string route;
    cur = shorten_once(cur, ambient, route);
    if (routes) routes->push_back(route);
  }
  return cur;
}

}  // namespace emptypt
