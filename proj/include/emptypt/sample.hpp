#pragma once

// Seeded random point-set generators. Every trial derives its own engine
// from (master seed, trial index), so results do not depend on scheduling.

#include <cstdint>
#include <random>
#include <vector>

#include "emptypt/geom.hpp"

namespace emptypt {

using Rng = std::mt19937_64;

inline constexpr std::int64_t kSampleGrid = 4096;

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);
inline Rng trial_rng(std::uint64_t master, std::uint64_t index) {
  return Rng(trial_seed(master, index));
}

/// n points uniform on [0, grid)^2, resampled until in general position.
std::vector<Point> random_general_position(std::size_t n, Rng& rng,
                                           std::int64_t grid = kSampleGrid);

/// A random triangle with `interior` points strictly inside it.
std::vector<Point> random_triangular_hull(std::size_t interior, Rng& rng,
                                          std::int64_t grid = kSampleGrid);

/// `hull` points in convex position plus `interior` points inside their hull.
std::vector<Point> random_hull_with_interior(std::size_t hull, std::size_t interior, Rng& rng,
                                             std::int64_t grid = kSampleGrid);

/// Appends a uniform point of the box that keeps `pts` in general position
/// and satisfies `accept`; gives up after `attempts` draws.
template <class Accept>
bool add_random_point(std::vector<Point>& pts, Rng& rng, std::int64_t lo_x, std::int64_t hi_x,
                      std::int64_t lo_y, std::int64_t hi_y, Accept accept,
                      int attempts = 100000) {
  std::uniform_int_distribution<std::int64_t> dx(lo_x, hi_x);
  std::uniform_int_distribution<std::int64_t> dy(lo_y, hi_y);
  for (int t = 0; t < attempts; ++t) {
    const Point p{dx(rng), dy(rng)};
    if (!accept(p)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i] == p) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
        if (orientation(pts[i], pts[j], p) == Orientation::Collinear) ok = false;
      }
    }
    if (ok) {
      pts.push_back(p);
      return true;
    }
  }
  return false;
}

}  // namespace emptypt
