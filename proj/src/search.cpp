#include "emptypt/search.hpp"

#include <algorithm>
#include <bit>

namespace emptypt {

TriangleTable::TriangleTable(std::span<const Point> points) : n_(points.size()) {
  if (n_ > kMaxOracleSize) {
    throw Error(ErrorKind::OutOfRange, "oracles support at most 64 points");
  }
  masks_.assign(n_ * n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      for (std::size_t k = j + 1; k < n_; ++k) {
        std::uint64_t m = 0;
        if (orientation(points[i], points[j], points[k]) != Orientation::Collinear) {
          for (std::size_t t = 0; t < n_; ++t) {
            if (t != i && t != j && t != k &&
                strictly_inside_triangle(points[t], points[i], points[j], points[k])) {
              m |= std::uint64_t{1} << t;
            }
          }
        }
        for (auto [a, b, c] : {std::array{i, j, k}, std::array{i, k, j}, std::array{j, i, k},
                               std::array{j, k, i}, std::array{k, i, j}, std::array{k, j, i}}) {
          masks_[(a * n_ + b) * n_ + c] = m;
        }
      }
    }
  }
}

bool in_convex_position(std::span<const Point> points) {
  if (points.size() < 3) return true;
  if (general_position_violation(points)) return false;
  return convex_hull(points).interior.empty();
}

namespace {

std::vector<Point> ccw_order(std::vector<Point> pts) {
  if (pts.size() < 3) return pts;
  return convex_hull(pts).hull.vertices;
}

/// Shared backtracking over k-subsets with hereditary acceptance.
class GonSearch {
 public:
  GonSearch(const PointSet& s, std::size_t k, bool require_empty)
      : s_(s), table_(s.points()), k_(k), require_empty_(require_empty) {}

  std::optional<std::vector<std::size_t>> run() {
    chosen_.clear();
    covered_.assign(k_ + 1, 0);
    if (dfs(0, 0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t start, std::uint64_t chosen_mask) {
    const std::size_t depth = chosen_.size();
    if (depth == k_) return true;
    const std::size_t n = s_.size();
    for (std::size_t p = start; p + (k_ - depth) <= n; ++p) {
      if (!accepts(p, chosen_mask, depth)) continue;
      std::uint64_t cov = covered_[depth];
      for (std::size_t a = 0; a < depth; ++a) {
        for (std::size_t b = a + 1; b < depth; ++b) cov |= table_.inside(chosen_[a], chosen_[b], p);
      }
      covered_[depth + 1] = cov;
      chosen_.push_back(p);
      if (dfs(p + 1, chosen_mask | (std::uint64_t{1} << p))) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool accepts(std::size_t p, std::uint64_t chosen_mask, std::size_t depth) const {
    const std::uint64_t bit = std::uint64_t{1} << p;
    if (require_empty_) {
      // Every triangle on the chosen vertices must be empty in S; this is
      // equivalent to convex position plus an empty hull.
      for (std::size_t a = 0; a < depth; ++a) {
        for (std::size_t b = a + 1; b < depth; ++b) {
          if (table_.inside(chosen_[a], chosen_[b], p) != 0) return false;
        }
      }
      return true;
    }
    if (covered_[depth] & bit) return false;
    for (std::size_t a = 0; a < depth; ++a) {
      for (std::size_t b = a + 1; b < depth; ++b) {
        if (table_.inside(chosen_[a], chosen_[b], p) & chosen_mask) return false;
      }
    }
    return true;
  }

  const PointSet& s_;
  TriangleTable table_;
  std::size_t k_;
  bool require_empty_;
  std::vector<std::size_t> chosen_;
  std::vector<std::uint64_t> covered_;
};

std::optional<HoleWitness> gon_search(const PointSet& s, std::size_t k, bool require_empty) {
  if (k < 3) throw Error(ErrorKind::OutOfRange, "k must be at least 3");
  if (k > s.size()) return std::nullopt;
  GonSearch search(s, k, require_empty);
  const auto idx = search.run();
  if (!idx) return std::nullopt;
  std::vector<Point> pts;
  for (std::size_t i : *idx) pts.push_back(s[i]);
  HoleWitness w;
  w.vertices = ccw_order(std::move(pts));
  w.empty = is_empty_in(Polygon{w.vertices}, s.points());
  return w;
}

}  // namespace

std::optional<HoleWitness> find_k_hole(const PointSet& s, std::size_t k) {
  auto w = gon_search(s, k, true);
  if (w && !verify_hole(s, *w, k)) {
    throw Error(ErrorKind::Certification, "k-hole witness failed re-verification");
  }
  return w;
}

std::optional<HoleWitness> find_convex_kgon(const PointSet& s, std::size_t k) {
  auto w = gon_search(s, k, false);
  if (w && !verify_convex_gon(s, *w, k)) {
    throw Error(ErrorKind::Certification, "convex gon witness failed re-verification");
  }
  return w;
}

namespace {

class PTSearch {
 public:
  PTSearch(const PointSet& s, const PTQuery& q) : s_(s), table_(s.points()), q_(q) {}

  std::optional<PTWitness> run() {
    const std::size_t n = s_.size();
    const std::size_t need = q_.size - 3;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          const std::uint64_t mask = table_.inside(i, j, k);
          if (static_cast<std::size_t>(std::popcount(mask)) < need) continue;
          corners_ = {s_[i], s_[j], s_[k]};
          if (orientation(s_[i], s_[j], s_[k]) == Orientation::Clockwise) {
            std::swap(corners_[1], corners_[2]);
          }
          triangle_mask_ = mask;
          candidates_.clear();
          for (std::size_t t = 0; t < n; ++t) {
            if (mask & (std::uint64_t{1} << t)) candidates_.push_back(t);
          }
          for (auto& c : chains_) c.clear();
          chosen_mask_ = 0;
          if (dfs(0, need)) return found_;
        }
      }
    }
    return std::nullopt;
  }

 private:
  bool chain_ok(std::size_t which) const {
    const Point& from = corners_[which];
    const Point& to = corners_[(which + 1) % 3];
    std::vector<Point> chain;
    for (std::size_t t : chains_[which]) chain.push_back(s_[t]);
    std::sort(chain.begin(), chain.end(), [&](const Point& p, const Point& q) {
      return orientation(from, p, q) == Orientation::Clockwise;
    });
    chain.insert(chain.begin(), from);
    chain.push_back(to);
    for (std::size_t t = 1; t + 1 < chain.size(); ++t) {
      if (orientation(chain[t - 1], chain[t], chain[t + 1]) != Orientation::Clockwise) return false;
    }
    return true;
  }

  std::optional<PseudoTriangle> assemble() const {
    ChainAssignment asg;
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t t : chains_[c]) asg.chains[c].push_back(s_[t]);
    }
    return assemble_pseudo_triangle(corners_[0], corners_[1], corners_[2], asg);
  }

  bool leaf() {
    auto pt = assemble();
    if (!pt) return false;
    if (q_.cls && pt->cls != *q_.cls) return false;
    bool empty = true;
    const std::uint64_t rest = triangle_mask_ & ~chosen_mask_;
    for (std::size_t t = 0; t < s_.size() && empty; ++t) {
      if ((rest & (std::uint64_t{1} << t)) && strictly_inside(pt->polygon, s_[t])) empty = false;
    }
    if (q_.require_empty && !empty) return false;
    found_ = PTWitness{std::move(*pt), empty};
    return true;
  }

  bool dfs(std::size_t pos, std::size_t need) {
    if (need == 0) return leaf();
    if (candidates_.size() - pos < need) return false;
    const std::size_t t = candidates_[pos];
    for (std::size_t c = 0; c < 3; ++c) {
      chains_[c].push_back(t);
      chosen_mask_ |= std::uint64_t{1} << t;
      if (chain_ok(c) && assemble() && dfs(pos + 1, need - 1)) return true;
      chosen_mask_ &= ~(std::uint64_t{1} << t);
      chains_[c].pop_back();
    }
    return dfs(pos + 1, need);
  }

  const PointSet& s_;
  TriangleTable table_;
  PTQuery q_;
  std::array<Point, 3> corners_{};
  std::uint64_t triangle_mask_ = 0;
  std::uint64_t chosen_mask_ = 0;
  std::vector<std::size_t> candidates_;
  std::array<std::vector<std::size_t>, 3> chains_;
  PTWitness found_;
};

}  // namespace

std::optional<PTWitness> find_pseudo_triangle(const PointSet& s, const PTQuery& query) {
  if (query.size < 3) throw Error(ErrorKind::OutOfRange, "pseudo-triangle size must be >= 3");
  if (query.size > s.size()) return std::nullopt;
  PTSearch search(s, query);
  auto w = search.run();
  if (w && !verify_pseudo_triangle(s, *w, query.size)) {
    throw Error(ErrorKind::Certification, "pseudo-triangle witness failed re-verification");
  }
  return w;
}

std::optional<PTWitness> find_empty_pseudo_triangle(const PointSet& s, std::size_t size,
                                                    bool require_empty) {
  return find_pseudo_triangle(s, PTQuery{size, require_empty, std::nullopt});
}

std::size_t lambda_convexity(const PointSet& s) {
  if (s.size() < 3) throw Error(ErrorKind::TooFewPoints, "lambda-convexity needs 3 points");
  const TriangleTable table(s.points());
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        best = std::max<std::size_t>(best, std::popcount(table.inside(i, j, k)));
      }
    }
  }
  return best;
}

SplitterType splitter_type(const PointSet& s, const Point& p) {
  const HullPartition part = convex_hull(s);
  if (part.hull.size() != 3) {
    throw Error(ErrorKind::Precondition, "splitter needs a triangular hull");
  }
  if (std::find(part.interior.begin(), part.interior.end(), p) == part.interior.end()) {
    throw Error(ErrorKind::Precondition, "splitter point must be an interior point");
  }
  const auto& h = part.hull.vertices;
  std::array<std::size_t, 3> counts{};
  for (std::size_t e = 0; e < 3; ++e) {
    counts[e] = points_in_triangle(p, h[e], h[(e + 1) % 3], s.points()).inside.size();
  }
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return SplitterType{counts[0], counts[1], counts[2]};
}

namespace {

bool all_in_set(const PointSet& s, std::span<const Point> pts) {
  return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return s.contains(p); });
}

}  // namespace

bool verify_convex_gon(const PointSet& s, const HoleWitness& w, std::size_t k) {
  if (w.vertices.size() != k || !all_in_set(s, w.vertices)) return false;
  if (!in_convex_position(w.vertices)) return false;
  const Polygon poly{w.vertices};
  if (signed_area2(poly) <= 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (orientation(poly.at_cyclic(static_cast<std::ptrdiff_t>(i) - 1), poly[i],
                    poly.at_cyclic(static_cast<std::ptrdiff_t>(i) + 1)) !=
        Orientation::CounterClockwise) {
      return false;
    }
  }
  return w.empty == is_empty_in(poly, s.points());
}

bool verify_hole(const PointSet& s, const HoleWitness& w, std::size_t k) {
  return verify_convex_gon(s, w, k) && w.empty;
}

bool verify_pseudo_triangle(const PointSet& s, const PTWitness& w, std::size_t size) {
  if (w.pt.size() != size || !all_in_set(s, w.pt.polygon.vertices)) return false;
  if (!is_simple(w.pt.polygon) || signed_area2(w.pt.polygon) <= 0) return false;
  const Classification c = classify_polygon(w.pt.polygon);
  if (c.kind != PolygonKind::PseudoTriangle && !(size == 3 && c.kind == PolygonKind::Convex)) {
    return false;
  }
  if (c.pseudo_triangle && c.pseudo_triangle->cls != w.pt.cls) return false;
  return w.empty == is_empty_in(w.pt.polygon, s.points());
}

}  // namespace emptypt
