#include "emptypt/geom.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace emptypt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooFewPoints: return "too-few-points";
    case ErrorKind::DuplicatePoint: return "duplicate-point";
    case ErrorKind::Collinear: return "collinear-triple";
    case ErrorKind::CoordinateRange: return "coordinate-range";
    case ErrorKind::CollinearCorners: return "collinear-corners";
    case ErrorKind::Degenerate: return "degenerate-input";
    case ErrorKind::NonSimple: return "non-simple";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::ClassMismatch: return "class-mismatch";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UnknownName: return "unknown-name";
    case ErrorKind::Certification: return "certification";
  }
  return "unknown";
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

namespace {

std::string describe(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

std::optional<std::string> general_position_violation(std::span<const Point> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) return "duplicate point " + describe(points[i]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (cross(points[i], points[j], points[k]) == 0) {
          return "collinear triple " + describe(points[i]) + " " + describe(points[j]) + " " +
                 describe(points[k]);
        }
      }
    }
  }
  return std::nullopt;
}

PointSet::PointSet(std::vector<Point> points, std::optional<std::string> id)
    : points_(std::move(points)), id_(std::move(id)) {
  for (const Point& p : points_) {
    if (std::llabs(p.x) > kCoordLimit || std::llabs(p.y) > kCoordLimit) {
      throw Error(ErrorKind::CoordinateRange, "coordinate out of range: " + describe(p));
    }
  }
  const std::size_t n = points_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points_[i] == points_[j]) {
        throw Error(ErrorKind::DuplicatePoint, "duplicate point " + describe(points_[i]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (cross(points_[i], points_[j], points_[k]) == 0) {
          throw Error(ErrorKind::Collinear, "collinear triple " + describe(points_[i]) + " " +
                                                describe(points_[j]) + " " +
                                                describe(points_[k]));
        }
      }
    }
  }
}

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
  const auto it = std::find(points_.begin(), points_.end(), p);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

const Point& Polygon::at_cyclic(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices.size());
  return vertices[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::int64_t signed_area2(const Polygon& polygon) {
  std::int64_t sum = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon.vertices[i];
    const Point& b = polygon.vertices[(i + 1) % n];
    sum += a.x * b.y - a.y * b.x;
  }
  return sum;
}

HullPartition convex_hull(std::span<const Point> points) {
  if (points.size() < 3) {
    throw Error(ErrorKind::TooFewPoints, "convex hull needs at least 3 points");
  }
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Andrew's monotone chain; collinear points are dropped from the hull.
  std::vector<Point> hull(2 * sorted.size());
  std::size_t k = 0;
  for (const Point& p : sorted) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = sorted.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = sorted[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {
    throw Error(ErrorKind::Degenerate, "all points are collinear");
  }

  HullPartition out;
  out.hull.vertices = std::move(hull);
  for (const Point& p : points) {
    if (std::find(out.hull.vertices.begin(), out.hull.vertices.end(), p) !=
        out.hull.vertices.end()) {
      continue;
    }
    out.interior.push_back(p);
  }
  return out;
}

std::vector<Polygon> convex_layers(std::span<const Point> points) {
  std::vector<Polygon> layers;
  std::vector<Point> rest(points.begin(), points.end());
  while (!rest.empty()) {
    if (rest.size() < 3) {
      std::sort(rest.begin(), rest.end());
      layers.push_back(Polygon{rest});
      break;
    }
    HullPartition part = convex_hull(rest);
    layers.push_back(std::move(part.hull));
    rest = std::move(part.interior);
  }
  return layers;
}

bool HalfPlane::contains(const Point& x) const {
  const Orientation o = orientation(from, to, x);
  return o == side || (closed && o == Orientation::Collinear);
}

bool ConvexRegion::contains(const Point& x) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const HalfPlane& h) { return h.contains(x); });
}

ConvexRegion ConvexRegion::operator&(const ConvexRegion& other) const {
  ConvexRegion out = *this;
  out.constraints.insert(out.constraints.end(), other.constraints.begin(),
                         other.constraints.end());
  return out;
}

ConvexRegion ConvexRegion::open_half_plane(const Point& p, const Point& q, const Point& r) {
  const Orientation side = orientation(p, q, r);
  if (side == Orientation::Collinear) {
    throw Error(ErrorKind::Degenerate, "half-plane reference point lies on the line");
  }
  return ConvexRegion{{HalfPlane{p, q, side, false}}};
}

ConvexRegion ConvexRegion::closed_half_plane(const Point& p, const Point& q, const Point& r) {
  ConvexRegion out = open_half_plane(p, q, r);
  out.constraints.front().closed = true;
  return out;
}

ConvexRegion ConvexRegion::opposite_half_plane(const Point& p, const Point& q, const Point& r) {
  ConvexRegion out = open_half_plane(p, q, r);
  out.constraints.front().side = -out.constraints.front().side;
  return out;
}

ConvexRegion ConvexRegion::cone(const Point& r, const Point& p, const Point& q) {
  // Points strictly between rays pr and pq (the angle is below pi).
  return open_half_plane(p, q, r) & open_half_plane(p, r, q);
}

ConvexRegion ConvexRegion::triangle(const Point& a, const Point& b, const Point& c) {
  if (orientation(a, b, c) == Orientation::Collinear) {
    throw Error(ErrorKind::CollinearCorners, "triangle corners are collinear");
  }
  return open_half_plane(a, b, c) & open_half_plane(b, c, a) & open_half_plane(c, a, b);
}

std::optional<Point> nearest_angular_neighbor(const Point& p, const Point& q,
                                              const ConvexRegion& region,
                                              std::span<const Point> points) {
  std::optional<Point> best;
  Orientation side = Orientation::Collinear;
  for (const Point& s : points) {
    if (s == p || s == q || !region.contains(s)) continue;
    const Orientation o = orientation(p, q, s);
    if (o == Orientation::Collinear) {
      throw Error(ErrorKind::Degenerate, "candidate lies on the reference ray");
    }
    if (!best) {
      best = s;
      side = o;
      continue;
    }
    if (o != side) {
      throw Error(ErrorKind::Precondition, "candidates lie on both sides of the reference line");
    }
    // s replaces best when it lies strictly inside Cone(best, p, q).
    const Orientation rel = orientation(p, *best, s);
    if (rel == Orientation::Collinear) {
      throw Error(ErrorKind::Degenerate, "two candidates at the same angle");
    }
    if (rel == -side) best = s;
  }
  return best;
}

std::optional<Point> nearest_neighbor_to_segment(const Point& p, const Point& q,
                                                 const ConvexRegion& region,
                                                 std::span<const Point> points) {
  std::optional<Point> best;
  std::int64_t best_height = 0;
  bool tied = false;
  for (const Point& s : points) {
    if (s == p || s == q || !region.contains(s)) continue;
    const std::int64_t h = std::llabs(cross(p, q, s));
    if (!best || h < best_height) {
      best = s;
      best_height = h;
      tied = false;
    } else if (h == best_height) {
      tied = true;
    }
  }
  if (tied) {
    throw Error(ErrorKind::Degenerate, "two candidates at equal distance from the segment");
  }
  return best;
}

bool strictly_inside_triangle(const Point& x, const Point& a, const Point& b, const Point& c) {
  const Orientation o = orientation(a, b, c);
  return o != Orientation::Collinear && orientation(a, b, x) == o &&
         orientation(b, c, x) == o && orientation(c, a, x) == o;
}

TriangleContents points_in_triangle(const Point& a, const Point& b, const Point& c,
                                    std::span<const Point> points) {
  const Orientation o = orientation(a, b, c);
  if (o == Orientation::Collinear) {
    throw Error(ErrorKind::CollinearCorners, "triangle corners are collinear");
  }
  TriangleContents out;
  for (const Point& x : points) {
    if (x == a || x == b || x == c) continue;
    const Orientation o1 = orientation(a, b, x);
    const Orientation o2 = orientation(b, c, x);
    const Orientation o3 = orientation(c, a, x);
    if (o1 == o && o2 == o && o3 == o) {
      out.inside.push_back(x);
    } else if (o1 != -o && o2 != -o && o3 != -o) {
      out.boundary.push_back(x);
    }
  }
  return out;
}

namespace {

bool on_segment(const Point& p, const Point& q, const Point& x) {
  return std::min(p.x, q.x) <= x.x && x.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= x.y &&
         x.y <= std::max(p.y, q.y);
}

}  // namespace

bool segments_intersect(const Point& p, const Point& q, const Point& r, const Point& s) {
  const Orientation o1 = orientation(p, q, r);
  const Orientation o2 = orientation(p, q, s);
  const Orientation o3 = orientation(r, s, p);
  const Orientation o4 = orientation(r, s, q);
  if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
      o3 != Orientation::Collinear && o4 != Orientation::Collinear) {
    return true;
  }
  if (o1 == Orientation::Collinear && on_segment(p, q, r)) return true;
  if (o2 == Orientation::Collinear && on_segment(p, q, s)) return true;
  if (o3 == Orientation::Collinear && on_segment(r, s, p)) return true;
  if (o4 == Orientation::Collinear && on_segment(r, s, q)) return true;
  return false;
}

bool segments_cross_properly(const Point& p, const Point& q, const Point& r, const Point& s) {
  const Orientation o1 = orientation(p, q, r);
  const Orientation o2 = orientation(p, q, s);
  const Orientation o3 = orientation(r, s, p);
  const Orientation o4 = orientation(r, s, q);
  return o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
         o3 != Orientation::Collinear && o4 != Orientation::Collinear && o1 != o2 && o3 != o4;
}

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long x = 0;
    long long y = 0;
    std::string rest;
    if (!(ls >> x >> y) || (ls >> rest)) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected \"x y\"");
    }
    out.push_back(Point{x, y});
  }
  return out;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return parse_points(in);
}

void write_points(std::ostream& out, std::span<const Point> points,
                  const std::vector<std::string>& header) {
  for (const std::string& h : header) out << "# " << h << '\n';
  for (const Point& p : points) out << p.x << ' ' << p.y << '\n';
}

}  // namespace emptypt
