#include <gtest/gtest.h>

#include <algorithm>

#include "emptypt/sample.hpp"
#include "emptypt/search.hpp"

using namespace emptypt;

namespace {

// Independent enumeration: co-lexicographic subsets, hull size and a
// sign-based emptiness test.
template <class F>
bool any_subset(std::size_t n, std::size_t k, F f) {
  std::vector<bool> sel(n, false);
  std::fill(sel.end() - static_cast<std::ptrdiff_t>(k), sel.end(), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (sel[i]) idx.push_back(i);
    }
    if (f(idx)) return true;
  } while (std::next_permutation(sel.begin(), sel.end()));
  return false;
}

bool inside_convex(const std::vector<Point>& hull, const Point& x) {
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (cross(hull[i], hull[(i + 1) % hull.size()], x) <= 0) return false;
  }
  return true;
}

bool brute_hole(const std::vector<Point>& s, std::size_t k, bool need_empty) {
  if (k > s.size()) return false;
  return any_subset(s.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> sub;
    for (auto i : idx) sub.push_back(s[i]);
    const auto part = convex_hull(sub);
    if (part.hull.size() != k) return false;
    if (!need_empty) return true;
    return std::none_of(s.begin(), s.end(),
                        [&](const Point& x) { return inside_convex(part.hull.vertices, x); });
  });
}

bool brute_pt(const std::vector<Point>& s, std::size_t l, bool need_empty) {
  if (l > s.size()) return false;
  return any_subset(s.size(), l, [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> sub;
    for (auto i : idx) sub.push_back(s[i]);
    std::sort(sub.begin() + 1, sub.end());
    do {
      const Polygon p{sub};
      if (!is_simple(p) || signed_area2(p) <= 0) continue;
      if (classify_polygon(p).kind != PolygonKind::PseudoTriangle) continue;
      if (!need_empty || is_empty_in(p, s)) return true;
    } while (std::next_permutation(sub.begin() + 1, sub.end()));
    return false;
  });
}

}  // namespace

TEST(FindKHole, Examples) {
  const PointSet klein({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {4, 5}});
  const auto w = find_k_hole(klein, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices.size(), 4u);
  EXPECT_TRUE(w->empty);
  EXPECT_TRUE(in_convex_position(w->vertices));

  const PointSet three({{0, 0}, {7, 1}, {2, 9}});
  EXPECT_TRUE(find_k_hole(three, 3));
  EXPECT_FALSE(find_k_hole(PointSet({{0, 0}, {10, 0}, {5, 10}, {5, 3}}), 4));
  EXPECT_THROW(find_k_hole(three, 2), Error);
}

TEST(FindKHole, AgreesWithIndependentEnumeration) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(101, t);
    const auto pts = random_general_position(5 + t % 6, rng, 200);
    const PointSet s(pts);
    for (std::size_t k = 4; k <= 6; ++k) {
      ASSERT_EQ(find_k_hole(s, k).has_value(), brute_hole(pts, k, true)) << "t=" << t << " k=" << k;
      ASSERT_EQ(find_convex_kgon(s, k).has_value(), brute_hole(pts, k, false));
    }
  }
}

TEST(FindConvexKgon, Examples) {
  const PointSet pent({{0, 0}, {10, 0}, {14, 8}, {5, 14}, {-4, 8}});
  EXPECT_TRUE(find_convex_kgon(pent, 5));
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = trial_rng(5, t);
    const PointSet s(random_general_position(9, rng));
    const auto w = find_convex_kgon(s, 5);
    ASSERT_TRUE(w);
    ASSERT_TRUE(in_convex_position(w->vertices));
  }
}

TEST(FindPseudoTriangle, Examples) {
  const PointSet s({{0, 0}, {12, 0}, {6, 10}, {5, 3}, {7, 3}});
  const auto w = find_empty_pseudo_triangle(s, 5, true);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->empty);
  EXPECT_EQ(w->pt.size(), 5u);

  const PointSet convex({{0, 0}, {10, 0}, {14, 8}, {5, 14}, {-4, 8}, {5, -4}});
  for (std::size_t l = 3; l <= 6; ++l) {
    if (l == 3) continue;
    EXPECT_FALSE(find_empty_pseudo_triangle(convex, l, false));
  }
  EXPECT_TRUE(find_empty_pseudo_triangle(convex, 3, true));
}

TEST(FindPseudoTriangle, OneConvexSetsHaveNoEmptyFivePt) {
  int seen = 0;
  for (std::uint64_t t = 0; seen < 50 && t < 20000; ++t) {
    Rng rng = trial_rng(77, t);
    const PointSet s(random_general_position(6 + t % 3, rng));
    if (lambda_convexity(s) != 1) continue;
    ++seen;
    ASSERT_FALSE(find_empty_pseudo_triangle(s, 5, true));
  }
  EXPECT_EQ(seen, 50);
}

TEST(FindPseudoTriangle, AgreesWithPolygonization) {
  for (std::uint64_t t = 0; t < 80; ++t) {
    Rng rng = trial_rng(202, t);
    const auto pts = random_general_position(6 + t % 2, rng, 300);
    const PointSet s(pts);
    for (std::size_t l = 4; l <= 6; ++l) {
      for (bool empty : {true, false}) {
        ASSERT_EQ(find_empty_pseudo_triangle(s, l, empty).has_value(), brute_pt(pts, l, empty))
            << "t=" << t << " l=" << l << " empty=" << empty;
      }
    }
  }
}

TEST(FindPseudoTriangle, EmptyImpliesNonEmptyAndLemmaOne) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(303, t);
    const PointSet s(random_triangular_hull(2 + t % 7, rng));
    ASSERT_TRUE(find_empty_pseudo_triangle(s, 5, true));
    for (std::size_t l = 6; l <= 8; ++l) {
      if (find_empty_pseudo_triangle(s, l, true)) ASSERT_TRUE(find_empty_pseudo_triangle(s, l, false));
    }
  }
}

TEST(FindPseudoTriangle, ClassFilter) {
  const PointSet s({{0, 0}, {12, 0}, {6, 10}, {5, 3}, {7, 3}});
  const auto fan = find_pseudo_triangle(s, PTQuery{4, true, PtClass::Fan});
  ASSERT_TRUE(fan);
  EXPECT_EQ(fan->pt.cls, PtClass::Fan);
  EXPECT_FALSE(find_pseudo_triangle(s, PTQuery{5, false, PtClass::Standard}));
}

TEST(LambdaConvexity, Examples) {
  EXPECT_EQ(lambda_convexity(PointSet({{0, 0}, {10, 0}, {5, 10}, {5, 3}})), 1u);
  EXPECT_EQ(lambda_convexity(PointSet({{0, 0}, {10, 0}, {14, 8}, {5, 14}, {-4, 8}})), 0u);
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(404, t);
    const auto pts = random_general_position(4 + t % 6, rng);
    ASSERT_EQ(lambda_convexity(PointSet(pts)) == 0, in_convex_position(pts));
  }
}

TEST(Splitter, Examples) {
  const PointSet s({{0, 0}, {10, 0}, {5, 10}, {5, 4}, {6, 2}});
  EXPECT_EQ(splitter_type(s, {5, 4}), (SplitterType{1, 0, 0}));
  EXPECT_EQ(splitter_type(PointSet({{0, 0}, {10, 0}, {5, 10}, {5, 4}}), {5, 4}),
            (SplitterType{0, 0, 0}));
  // (2,1,1): two points below p, one left, one right
  const PointSet t({{0, 0}, {40, 0}, {20, 40}, {20, 15}, {18, 4}, {23, 6}, {12, 14}, {27, 16}});
  EXPECT_EQ(splitter_type(t, {20, 15}), (SplitterType{2, 1, 1}));
  EXPECT_THROW(splitter_type(t, {0, 0}), Error);
  EXPECT_THROW(splitter_type(PointSet({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {4, 5}}), {4, 5}), Error);
}

TEST(Splitter, ComponentsSumToInteriorMinusOne) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = trial_rng(505, t);
    const auto pts = random_triangular_hull(1 + t % 8, rng);
    const PointSet s(pts);
    for (std::size_t i = 3; i < pts.size(); ++i) {
      const auto sp = splitter_type(s, pts[i]);
      ASSERT_EQ(sp.x + sp.y + sp.z, pts.size() - 4);
      ASSERT_GE(sp.x, sp.y);
      ASSERT_GE(sp.y, sp.z);
    }
  }
}

TEST(Certificates, RejectTamperedWitnesses) {
  const PointSet s({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {4, 5}});
  auto w = *find_k_hole(s, 4);
  EXPECT_TRUE(verify_hole(s, w, 4));
  w.vertices[0] = {1, 1};
  EXPECT_FALSE(verify_hole(s, w, 4));
  HoleWitness whole{{{0, 0}, {10, 0}, {10, 10}, {0, 10}}, true};
  EXPECT_FALSE(verify_hole(s, whole, 4));
}
