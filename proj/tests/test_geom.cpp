#include <gtest/gtest.h>

#include <sstream>

#include "emptypt/geom.hpp"
#include "emptypt/sample.hpp"

using namespace emptypt;

TEST(Orientation, BasisCases) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), Orientation::CounterClockwise);
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), Orientation::Collinear);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), Orientation::Clockwise);
}

TEST(Orientation, LargeCoordinatesStayExact) {
  const std::int64_t m = kCoordLimit;
  EXPECT_EQ(orientation({-m, -m}, {m, m}, {m - 1, m}), Orientation::CounterClockwise);
  EXPECT_EQ(orientation({-m, -m}, {m, m}, {0, 0}), Orientation::Collinear);
}

TEST(Orientation, AntisymmetricUnderTranspositions) {
  Rng rng(1);
  for (int t = 0; t < 2000; ++t) {
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    const Point p{d(rng), d(rng)}, q{d(rng), d(rng)}, r{d(rng), d(rng)};
    const Orientation o = orientation(p, q, r);
    ASSERT_EQ(orientation(p, r, q), -o);
    ASSERT_EQ(orientation(q, p, r), -o);
    ASSERT_EQ(orientation(r, q, p), -o);
    ASSERT_EQ(orientation(q, r, p), o);
  }
}

TEST(PointSet, RejectsDegenerateInput) {
  EXPECT_THROW(PointSet({{0, 0}, {1, 1}, {2, 2}}), Error);
  EXPECT_THROW(PointSet({{0, 0}, {0, 0}, {2, 3}}), Error);
  EXPECT_THROW(PointSet({{0, 0}, {kCoordLimit + 1, 0}, {2, 3}}), Error);
  try {
    PointSet({{0, 0}, {1, 1}, {2, 2}});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Collinear);
  }
}

TEST(ConvexHull, SquareWithCenter) {
  // the centre is collinear with a diagonal, so no PointSet here
  const std::vector<Point> square{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 5}};
  EXPECT_THROW(PointSet{square}, Error);
  const auto part = convex_hull(square);
  EXPECT_EQ(part.hull.size(), 4u);
  EXPECT_EQ(part.interior, (std::vector<Point>{{5, 5}}));
}

TEST(ConvexHull, Triangle) {
  const auto part = convex_hull(PointSet({{0, 0}, {10, 0}, {5, 10}}));
  EXPECT_EQ(part.hull.size(), 3u);
  EXPECT_TRUE(part.interior.empty());
}

TEST(ConvexHull, TriangleWithTwoInterior) {
  const auto part = convex_hull(PointSet({{0, 0}, {12, 0}, {6, 10}, {5, 3}, {7, 3}}));
  EXPECT_EQ(part.hull.size(), 3u);
  EXPECT_EQ(part.interior.size(), 2u);
}

TEST(ConvexHull, RandomSetsAreConvexAndCoverEverything) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = trial_rng(7, t);
    const auto pts = random_general_position(3 + t % 15, rng);
    const auto part = convex_hull(pts);
    const auto& h = part.hull;
    ASSERT_EQ(h.size() + part.interior.size(), pts.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      ASSERT_EQ(orientation(h[i], h.at_cyclic(i + 1), h.at_cyclic(i + 2)),
                Orientation::CounterClockwise);
    }
    for (const Point& p : pts) {
      for (std::size_t i = 0; i < h.size(); ++i) {
        ASSERT_NE(orientation(h[i], h.at_cyclic(i + 1), p), Orientation::Clockwise);
      }
    }
  }
}

TEST(ConvexLayers, Examples) {
  EXPECT_EQ(convex_layers(std::vector<Point>{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 5}}).size(), 2u);
  EXPECT_EQ(convex_layers(PointSet({{0, 0}, {10, 0}, {5, 10}})).size(), 1u);
  const auto nested = convex_layers(PointSet({{0, 0}, {30, 0}, {15, 27}, {7, 3}, {23, 4},
                                              {16, 19}, {12, 8}, {18, 9}, {15, 13}}));
  ASSERT_EQ(nested.size(), 3u);
  for (const auto& layer : nested) EXPECT_EQ(layer.size(), 3u);
}

TEST(ConvexLayers, PartitionTheSet) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = trial_rng(11, t);
    const auto pts = random_general_position(1 + t % 20, rng);
    std::size_t total = 0;
    for (const auto& layer : convex_layers(pts)) total += layer.size();
    ASSERT_EQ(total, pts.size());
  }
}

TEST(NearestAngularNeighbor, Examples) {
  const auto upper = ConvexRegion::open_half_plane({0, 0}, {10, 0}, {0, 1});
  const std::vector<Point> s{{5, 1}, {5, 5}, {5, -3}};
  EXPECT_EQ(nearest_angular_neighbor({0, 0}, {10, 0}, upper, s), (Point{5, 1}));
  EXPECT_EQ(nearest_angular_neighbor({0, 0}, {10, 0}, upper, std::vector<Point>{{3, -1}}),
            std::nullopt);
  EXPECT_EQ(nearest_angular_neighbor({0, 0}, {10, 0}, upper, std::vector<Point>{{2, 9}}),
            (Point{2, 9}));
}

TEST(NearestAngularNeighbor, LeavesAnEmptyCone) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(3, t);
    const auto pts = random_general_position(12, rng);
    const Point p = pts[0], q = pts[1];
    const auto region = ConvexRegion::open_half_plane(p, q, pts[2]);
    const auto s = nearest_angular_neighbor(p, q, region, pts);
    ASSERT_TRUE(s.has_value());
    const auto cone = ConvexRegion::cone(*s, p, q) & region;
    for (const Point& x : pts) ASSERT_FALSE(cone.contains(x)) << x;
  }
}

TEST(NearestNeighborToSegment, Examples) {
  const auto upper = ConvexRegion::open_half_plane({0, 0}, {10, 0}, {0, 1});
  EXPECT_EQ(nearest_neighbor_to_segment({0, 0}, {10, 0}, upper,
                                        std::vector<Point>{{3, 2}, {7, 5}}),
            (Point{3, 2}));
  EXPECT_EQ(nearest_neighbor_to_segment({0, 0}, {10, 0}, upper, std::vector<Point>{}),
            std::nullopt);
  try {
    nearest_neighbor_to_segment({0, 0}, {10, 0}, upper, std::vector<Point>{{3, 2}, {7, 2}});
    FAIL() << "tie accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(PointsInTriangle, Examples) {
  const std::vector<Point> s{{5, 3}, {20, 20}};
  EXPECT_EQ(points_in_triangle({0, 0}, {10, 0}, {5, 10}, s).inside, (std::vector<Point>{{5, 3}}));
  EXPECT_TRUE(points_in_triangle({0, 0}, {10, 0}, {5, 10}, std::vector<Point>{}).inside.empty());
  const auto edge = points_in_triangle({0, 0}, {10, 0}, {5, 10}, std::vector<Point>{{4, 0}});
  EXPECT_TRUE(edge.inside.empty());
  EXPECT_EQ(edge.boundary, (std::vector<Point>{{4, 0}}));
  EXPECT_THROW(points_in_triangle({0, 0}, {1, 1}, {2, 2}, s), Error);
}

TEST(PointsInTriangle, AgreesWithSignCheck) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = trial_rng(5, t);
    const auto pts = random_general_position(15, rng);
    const auto got = points_in_triangle(pts[0], pts[1], pts[2], pts).inside;
    std::vector<Point> want;
    for (const Point& x : pts) {
      const auto o1 = cross(pts[0], pts[1], x), o2 = cross(pts[1], pts[2], x),
                 o3 = cross(pts[2], pts[0], x);
      if ((o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0)) want.push_back(x);
    }
    ASSERT_EQ(got, want);
  }
}

TEST(TextFormat, RoundTripAndErrors) {
  std::istringstream in("# comment\n1 2\n\n-3 4\n");
  const auto pts = parse_points(in);
  EXPECT_EQ(pts, (std::vector<Point>{{1, 2}, {-3, 4}}));
  std::ostringstream out;
  write_points(out, pts, {"claims: none"});
  std::istringstream back(out.str());
  EXPECT_EQ(parse_points(back), pts);
  std::istringstream bad("1 2 3\n");
  EXPECT_THROW(parse_points(bad), Error);
  std::istringstream word("a b\n");
  EXPECT_THROW(parse_points(word), Error);
}
