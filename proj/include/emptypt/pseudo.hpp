#pragma once

// Pseudo-triangles: simple polygons with exactly three convex vertices.
//
// A pseudo-triangle with corners a, b, c (counter-clockwise) is stored as its
// polygon plus the three side chains C(a,b), C(b,c), C(c,a), each listed from
// its first corner to its second with both endpoints included. The class tag
// counts single-edge chains: none (STANDARD), one (MOUNTAIN), two (FAN) or
// three (TRIANGLE).

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emptypt/geom.hpp"

namespace emptypt {

enum class PtClass { Triangle, Standard, Mountain, Fan };

const char* to_string(PtClass cls);
std::optional<PtClass> pt_class_from_string(const std::string& name);

struct PseudoTriangle {
  Polygon polygon;  // counter-clockwise, starts at corners[0]
  std::array<Point, 3> corners;
  std::array<std::vector<Point>, 3> chains;
  PtClass cls = PtClass::Triangle;
  std::optional<Point> apex;  // set iff cls == Fan

  std::size_t size() const { return polygon.size(); }
  /// Number of edges of chain i.
  std::size_t chain_edges(std::size_t i) const { return chains[i].size() - 1; }
};

enum class PolygonKind { Convex, PseudoTriangle, Other };

struct Classification {
  PolygonKind kind = PolygonKind::Other;
  std::size_t convex_vertices = 0;
  std::optional<PseudoTriangle> pseudo_triangle;
};

bool is_simple(const Polygon& polygon);

/// Reverses the cycle (keeping the first vertex) when it runs clockwise.
Polygon orient_ccw(Polygon polygon);

/// Requires a simple counter-clockwise polygon; throws NonSimple otherwise.
/// Vertices with an interior angle below 180 degrees are convex.
Classification classify_polygon(const Polygon& polygon);

/// Treats the vertex sequence as a cycle in either orientation and returns
/// the pseudo-triangle it bounds, if it is one.
std::optional<PseudoTriangle> as_pseudo_triangle(std::vector<Point> cycle);

/// Non-corner points per side chain; index 0 is C(a,b), 1 is C(b,c), 2 is C(c,a).
/// The order inside each chain is not significant: it is forced by convexity.
struct ChainAssignment {
  std::array<std::vector<Point>, 3> chains;
};

/// Builds a -> C(a,b) -> b -> C(b,c) -> c -> C(c,a). Returns nullopt when a
/// point lies outside triangle abc or the chains do not bound a
/// pseudo-triangle with corners a, b, c. If abc is clockwise the corners are
/// relabelled (a, c, b) so that the result is counter-clockwise.
std::optional<PseudoTriangle> assemble_pseudo_triangle(const Point& a, const Point& b,
                                                       const Point& c,
                                                       const ChainAssignment& assignment);

/// Strict interior test; points on the boundary are outside.
bool strictly_inside(const Polygon& polygon, const Point& x);

/// True iff no point of `points` lies strictly inside the polygon.
bool is_empty_in(const Polygon& polygon, std::span<const Point> points);

std::size_t count_inside(const Polygon& polygon, std::span<const Point> points);
std::vector<Point> points_inside(const Polygon& polygon, std::span<const Point> points);

/// Rebuilds a mountain or fan with at least six vertices as a STANDARD
/// pseudo-triangle on the same vertex set. `route`, when given, receives the
/// rule that produced the result ("identity", "mountain-nearest",
/// "mountain-cone", "mountain-cone-else", "fan", or "exhaustive").
PseudoTriangle standardize(const PseudoTriangle& pt, std::string* route = nullptr);

/// Shrinks an empty mountain one vertex at a time down to m vertices. Every
/// intermediate polygon is checked for emptiness against `ambient`. A
/// mountain needs at least five vertices, so m == 4 yields a FAN and m == 3
/// yields a TRIANGLE. `routes`, when given, receives one entry per step.
PseudoTriangle shorten_mountain(const PseudoTriangle& pt, std::size_t m,
                                std::span<const Point> ambient,
                                std::vector<std::string>* routes = nullptr);

}  // namespace emptypt
