#include "emptypt/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace emptypt {

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = master * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

auto any_point = [](const Point&) { return true; };

}  // namespace

std::vector<Point> random_general_position(std::size_t n, Rng& rng, std::int64_t grid) {
  if (n > 1000) throw Error(ErrorKind::OutOfRange, "sample size too large");
  for (;;) {
    std::vector<Point> pts;
    while (pts.size() < n && add_random_point(pts, rng, 0, grid - 1, 0, grid - 1, any_point, 1000)) {
    }
    if (pts.size() == n) return pts;
  }
}

std::vector<Point> random_triangular_hull(std::size_t interior, Rng& rng, std::int64_t grid) {
  for (;;) {
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i) add_random_point(pts, rng, 0, grid - 1, 0, grid - 1, any_point);
    const Point a = pts[0], b = pts[1], c = pts[2];
    // reject thin triangles so that interior sampling stays cheap
    if (std::llabs(cross(a, b, c)) < grid * grid / 4) continue;
    const auto inside = [&](const Point& p) { return strictly_inside_triangle(p, a, b, c); };
    bool ok = true;
    while (ok && pts.size() < interior + 3) {
      ok = add_random_point(pts, rng, 0, grid - 1, 0, grid - 1, inside, 10000);
    }
    if (ok) return pts;
  }
}

std::vector<Point> random_hull_with_interior(std::size_t hull, std::size_t interior, Rng& rng,
                                             std::int64_t grid) {
  if (hull < 3) throw Error(ErrorKind::OutOfRange, "hull needs at least 3 points");
  const double r = static_cast<double>(grid) / 2 - 1;
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (;;) {
    std::vector<double> angles(hull);
    for (double& t : angles) t = angle(rng);
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    for (double t : angles) {
      pts.push_back({static_cast<std::int64_t>(std::lround(r + r * std::cos(t))),
                     static_cast<std::int64_t>(std::lround(r + r * std::sin(t)))});
    }
    if (general_position_violation(pts)) continue;
    const HullPartition part = convex_hull(pts);
    if (part.hull.size() != hull) continue;
    const Polygon poly = part.hull;
    const auto inside = [&](const Point& p) {
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (orientation(poly[i], poly[(i + 1) % poly.size()], p) != Orientation::CounterClockwise) {
          return false;
        }
      }
      return true;
    };
    bool ok = true;
    while (ok && pts.size() < hull + interior) {
      ok = add_random_point(pts, rng, 0, grid - 1, 0, grid - 1, inside, 10000);
    }
    if (ok) return pts;
  }
}

}  // namespace emptypt
