#pragma once

// Exact planar primitives on integer coordinates.
//
// Every predicate in this library reduces to the sign of a 2x2 determinant
// evaluated in 64-bit integers. Input coordinates are bounded by
// kCoordLimit, so determinants stay far below 2^63 even for the auxiliary
// direction points (p + (p - q)) that the constructive procedures use.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace emptypt {

enum class ErrorKind {
  TooFewPoints,
  DuplicatePoint,
  Collinear,
  CoordinateRange,
  CollinearCorners,
  Degenerate,
  NonSimple,
  Precondition,
  OutOfRange,
  ClassMismatch,
  Parse,
  UnknownName,
  Certification,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 20;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

enum class Orientation : int { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

inline constexpr Orientation operator-(Orientation o) {
  return static_cast<Orientation>(-static_cast<int>(o));
}

/// Twice the signed area of triangle pqr.
constexpr std::int64_t cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

constexpr Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const std::int64_t d = cross(p, q, r);
  return d > 0 ? Orientation::CounterClockwise
               : (d < 0 ? Orientation::Clockwise : Orientation::Collinear);
}

/// Finite set of distinct points, no three on a line. Validated on construction.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points, std::optional<std::string> id = std::nullopt);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  std::span<const Point> points() const { return points_; }
  const std::vector<Point>& vector() const { return points_; }
  const std::optional<std::string>& id() const { return id_; }

  /// Index of p in the set, if present.
  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p).has_value(); }

 private:
  std::vector<Point> points_;
  std::optional<std::string> id_;
};

/// Returns a description of the first general-position violation, if any.
std::optional<std::string> general_position_violation(std::span<const Point> points);

/// Cyclic vertex sequence. Convexity, simplicity and orientation are
/// properties checked by the pseudo module, not invariants of this type.
struct Polygon {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }
  const Point& operator[](std::size_t i) const { return vertices[i]; }
  const Point& at_cyclic(std::ptrdiff_t i) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;
};

/// Twice the signed area (positive for counter-clockwise).
std::int64_t signed_area2(const Polygon& polygon);

struct HullPartition {
  Polygon hull;                 // counter-clockwise, starting at the lowest-leftmost point
  std::vector<Point> interior;  // points strictly inside, in input order
};

HullPartition convex_hull(std::span<const Point> points);
inline HullPartition convex_hull(const PointSet& s) { return convex_hull(s.points()); }

/// Onion peeling. Trailing layers of one or two points are returned as
/// degenerate polygons.
std::vector<Polygon> convex_layers(std::span<const Point> points);
inline std::vector<Polygon> convex_layers(const PointSet& s) { return convex_layers(s.points()); }

// -- regions ---------------------------------------------------------------

/// Points x with orientation(from, to, x) == side; collinear points are
/// accepted too when the half-plane is closed.
struct HalfPlane {
  Point from;
  Point to;
  Orientation side = Orientation::CounterClockwise;
  bool closed = false;

  bool contains(const Point& x) const;
};

/// Conjunction of half-planes. An empty constraint list is the whole plane.
struct ConvexRegion {
  std::vector<HalfPlane> constraints;

  bool contains(const Point& x) const;
  ConvexRegion operator&(const ConvexRegion& other) const;

  static ConvexRegion whole_plane() { return {}; }
  /// H(pq, r): open half-plane bounded by line pq containing r.
  static ConvexRegion open_half_plane(const Point& p, const Point& q, const Point& r);
  /// Closed version of H(pq, r).
  static ConvexRegion closed_half_plane(const Point& p, const Point& q, const Point& r);
  /// Open half-plane bounded by line pq not containing r.
  static ConvexRegion opposite_half_plane(const Point& p, const Point& q, const Point& r);
  /// Cone(rpq): interior of the angle at apex p between rays pr and pq.
  static ConvexRegion cone(const Point& r, const Point& p, const Point& q);
  /// Interior of triangle abc.
  static ConvexRegion triangle(const Point& a, const Point& b, const Point& c);
};

/// Returns s in region with Cone(spq) ∩ region free of the candidate points.
/// Candidates must all lie strictly on one side of line pq.
std::optional<Point> nearest_angular_neighbor(const Point& p, const Point& q,
                                              const ConvexRegion& region,
                                              std::span<const Point> points);

/// Point of region with the smallest perpendicular distance to line pq.
/// Equal distances throw ErrorKind::Degenerate.
std::optional<Point> nearest_neighbor_to_segment(const Point& p, const Point& q,
                                                 const ConvexRegion& region,
                                                 std::span<const Point> points);

struct TriangleContents {
  std::vector<Point> inside;
  std::vector<Point> boundary;  // on an edge, corners excluded
};

TriangleContents points_in_triangle(const Point& a, const Point& b, const Point& c,
                                    std::span<const Point> points);

/// Strict interior test against triangle abc (any orientation).
bool strictly_inside_triangle(const Point& x, const Point& a, const Point& b, const Point& c);

/// Proper or improper intersection of closed segments pq and rs.
bool segments_intersect(const Point& p, const Point& q, const Point& r, const Point& s);
/// Intersection in a single interior point of both segments.
bool segments_cross_properly(const Point& p, const Point& q, const Point& r, const Point& s);

// -- text format -----------------------------------------------------------

/// One "x y" pair per line; '#' starts a comment line; blank lines ignored.
std::vector<Point> parse_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

/// Comment lines listed in `header` are emitted first, each prefixed by "# ".
void write_points(std::ostream& out, std::span<const Point> points,
                  const std::vector<std::string>& header = {});

}  // namespace emptypt
