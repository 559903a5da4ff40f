#include <gtest/gtest.h>

#include "emptypt/constructive.hpp"
#include "emptypt/sample.hpp"

using namespace emptypt;

namespace {

void expect_certified(const PointSet& s, const Construction& c, std::size_t size) {
  ASSERT_FALSE(c.oracle_fallback) << c.diagnostics.front().message;
  const auto& pt = c.witness.pt;
  EXPECT_EQ(pt.size(), size);
  EXPECT_TRUE(c.witness.empty);
  EXPECT_TRUE(is_empty_in(pt.polygon, s.points()));
  const auto cl = classify_polygon(pt.polygon);
  EXPECT_EQ(cl.kind, PolygonKind::PseudoTriangle);
  EXPECT_TRUE(verify_pseudo_triangle(s, c.witness, size));
  EXPECT_TRUE(find_empty_pseudo_triangle(s, size, true));
  EXPECT_TRUE(c.trace.strictly_decreasing());
  ASSERT_FALSE(c.trace.steps.empty());
  EXPECT_EQ(c.trace.steps.back().interior, 0u);
}

}  // namespace

TEST(Empty5, Example) {
  const PointSet s({{0, 0}, {12, 0}, {6, 10}, {5, 3}, {7, 3}});
  for (std::size_t b = 0; b < 3; ++b) expect_certified(s, empty_5pt_triangular(s, b), 5);
  EXPECT_THROW(empty_5pt_triangular(s, 3), Error);
  EXPECT_THROW(empty_5pt_triangular(PointSet({{0, 0}, {12, 0}, {6, 10}, {5, 3}})), Error);
  EXPECT_THROW(empty_5pt_triangular(PointSet({{0, 0}, {10, 0}, {14, 8}, {5, 14}, {4, 5}})), Error);
}

TEST(Empty5, RandomSetsEveryHullVertex) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(601, t);
    const PointSet s(random_triangular_hull(2 + t % 9, rng));
    for (std::size_t b = 0; b < 3; ++b) expect_certified(s, empty_5pt_triangular(s, b), 5);
  }
}

TEST(Empty6, BaseCaseAndErrors) {
  const PointSet s({{0, 0}, {40, 0}, {20, 40}, {20, 10}, {14, 16}, {25, 17}});
  const auto c = empty_6pt_triangular(s);
  expect_certified(s, c, 6);
  EXPECT_EQ(c.witness.pt.cls, PtClass::Standard);
  EXPECT_THROW(empty_6pt_triangular(PointSet({{0, 0}, {12, 0}, {6, 10}, {5, 3}, {7, 3}})), Error);
}

TEST(Empty6, DescentOnRandomSets) {
  std::size_t multi = 0;
  for (std::uint64_t t = 0; t < 400; ++t) {
    Rng rng = trial_rng(602, t);
    const PointSet s(random_triangular_hull(3 + t % 12, rng));
    const auto c = empty_6pt_triangular(s);
    expect_certified(s, c, 6);
    ASSERT_EQ(c.witness.pt.cls, PtClass::Standard);
    for (const auto& st : c.trace.steps) ASSERT_EQ(st.pt.cls, PtClass::Standard);
    if (c.trace.steps.size() > 1) ++multi;
  }
  EXPECT_GT(multi, 0u);
}

TEST(Standard7, SplitterBranch) {
  const PointSet s({{0, 0}, {40, 0}, {20, 40}, {20, 15}, {18, 4}, {23, 6}, {12, 14}, {27, 16}});
  const auto c = standard_7pt_triangular(s);
  ASSERT_FALSE(c.oracle_fallback);
  EXPECT_EQ(c.witness.pt.size(), 7u);
  EXPECT_EQ(c.witness.pt.cls, PtClass::Standard);
  EXPECT_EQ(classify_polygon(c.witness.pt.polygon).kind, PolygonKind::PseudoTriangle);
  EXPECT_EQ(c.trace.steps.back().tag.rfind("lemma3-splitter", 0), 0u);
}

TEST(Standard7, WithoutSplitter) {
  const std::vector<Point> pts{{6, 45}, {48, 13}, {61, 42}, {31, 32}, {52, 29}, {51, 27}, {46, 27}, {24, 34}};
  const PointSet s(pts);
  for (std::size_t i = 3; i < pts.size(); ++i) ASSERT_NE(splitter_type(s, pts[i]), (SplitterType{2, 1, 1}));
  const auto c = standard_7pt_triangular(s);
  ASSERT_FALSE(c.oracle_fallback);
  EXPECT_EQ(c.witness.pt.size(), 7u);
  EXPECT_EQ(c.witness.pt.cls, PtClass::Standard);
  EXPECT_EQ(c.trace.steps.back().tag.rfind("lemma3-case", 0), 0u);
  EXPECT_THROW(standard_7pt_triangular(PointSet({{0, 0}, {40, 0}, {20, 40}, {20, 15}, {18, 4}, {23, 6}, {12, 14}})),
               Error);
}

TEST(Empty7, RandomSetsNeedNoOracle) {
  std::size_t multi = 0;
  for (std::uint64_t t = 0; t < 400; ++t) {
    Rng rng = trial_rng(603, t);
    const PointSet s(random_triangular_hull(5 + t % 11, rng));
    const auto c = empty_7pt_triangular(s);
    expect_certified(s, c, 7);
    if (c.trace.steps.size() > 2) ++multi;
  }
  EXPECT_GT(multi, 0u);
}

TEST(Empty7, TightnessFixture) {
  const PointSet s(read_points_file(EMPTYPT_FIXTURE_DIR "/tightness_4interior.txt"));
  EXPECT_EQ(convex_hull(s).hull.size(), 3u);
  EXPECT_FALSE(find_empty_pseudo_triangle(s, 7, false));
  EXPECT_THROW(empty_7pt_triangular(s), Error);
}

TEST(FourFan, EveryTriangularFourSubsetIsAPseudoTriangle) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(604, t);
    const auto pts = random_triangular_hull(1, rng);
    const auto all = pseudo_triangles_on(pts);
    ASSERT_FALSE(all.empty());
    for (const auto& pt : all) ASSERT_EQ(pt.cls, PtClass::Fan);
  }
}
