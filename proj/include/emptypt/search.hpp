#pragma once

// Brute-force oracles with self-checking certificates.
//
// All searches enumerate index subsets of the input in a fixed order, so the
// first witness is reproducible:
//   * holes and convex gons: k-subsets in lexicographic order of indices;
//   * pseudo-triangles: corner triples (i < j < k) in lexicographic order,
//     then subsets of the triangle's interior points in lexicographic order,
//     each point trying chains C(a,b), C(b,c), C(c,a) in that order.
// Every returned witness is re-verified from coordinates before it leaves
// the function. Sets are limited to 64 points (bitmask tables).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "emptypt/geom.hpp"
#include "emptypt/pseudo.hpp"

namespace emptypt {

inline constexpr std::size_t kMaxOracleSize = 64;

/// inside(i, j, k): bitmask of the points strictly inside triangle (i, j, k).
class TriangleTable {
 public:
  explicit TriangleTable(std::span<const Point> points);

  std::size_t size() const { return n_; }
  std::uint64_t inside(std::size_t i, std::size_t j, std::size_t k) const {
    return masks_[(i * n_ + j) * n_ + k];
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> masks_;
};

struct HoleWitness {
  std::vector<Point> vertices;  // convex position, counter-clockwise
  bool empty = false;           // re-verified against the ambient set
};

struct PTWitness {
  PseudoTriangle pt;
  bool empty = false;
};

struct SplitterType {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;

  friend bool operator==(const SplitterType&, const SplitterType&) = default;
};

struct PTQuery {
  std::size_t size = 5;
  bool require_empty = true;
  std::optional<PtClass> cls;  // restrict to one class when set
};

std::optional<HoleWitness> find_k_hole(const PointSet& s, std::size_t k);
std::optional<HoleWitness> find_convex_kgon(const PointSet& s, std::size_t k);
std::optional<PTWitness> find_empty_pseudo_triangle(const PointSet& s, std::size_t size,
                                                    bool require_empty);
std::optional<PTWitness> find_pseudo_triangle(const PointSet& s, const PTQuery& query);

/// Maximum number of points inside a triangle spanned by the set.
std::size_t lambda_convexity(const PointSet& s);

SplitterType splitter_type(const PointSet& s, const Point& p);

/// Convex position check used to validate certificates.
bool in_convex_position(std::span<const Point> points);

/// Certificate checks from coordinates alone.
bool verify_hole(const PointSet& s, const HoleWitness& w, std::size_t k);
bool verify_convex_gon(const PointSet& s, const HoleWitness& w, std::size_t k);
bool verify_pseudo_triangle(const PointSet& s, const PTWitness& w, std::size_t size);

}  // namespace emptypt
