#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "emptypt/extremal.hpp"
#include "emptypt/sample.hpp"
#include "emptypt/search.hpp"

using namespace emptypt;

namespace {

std::size_t brute_lambda(const std::vector<Point>& s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        std::size_t c = 0;
        for (const Point& x : s) {
          const auto o1 = cross(s[i], s[j], x), o2 = cross(s[j], s[k], x), o3 = cross(s[k], s[i], x);
          if ((o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0)) ++c;
        }
        best = std::max(best, c);
      }
    }
  }
  return best;
}

// Convex k-gon by subset enumeration: a subset is in convex position iff no
// point lies in a triangle of three others.
bool brute_convex_kgon(const std::vector<Point>& s, std::size_t k) {
  if (k > s.size()) return false;
  std::vector<bool> sel(s.size(), false);
  std::fill(sel.end() - static_cast<std::ptrdiff_t>(k), sel.end(), true);
  do {
    std::vector<Point> sub;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (sel[i]) sub.push_back(s[i]);
    }
    if (brute_lambda(sub) == 0) return true;
  } while (std::next_permutation(sel.begin(), sel.end()));
  return false;
}

}  // namespace

TEST(MValue, FirstSixValues) {
  const std::vector<std::int64_t> want{3, 5, 7, 11, 15, 23};
  for (int nu = 3; nu <= 8; ++nu) EXPECT_EQ(m_value(nu), want[static_cast<std::size_t>(nu - 3)]);
  EXPECT_THROW(m_value(2), Error);
}

TEST(Claims, ParseAndPrint) {
  const auto claims = parse_claims("no-5-hole, no-6-gon,no-empty-7-pt no-8-pt,lambda<=2,hull=3");
  ASSERT_EQ(claims.size(), 6u);
  EXPECT_EQ(claims[0], (Claim{ClaimKind::NoHole, 5}));
  EXPECT_EQ(claims[1], (Claim{ClaimKind::NoConvexGon, 6}));
  EXPECT_EQ(claims[2], (Claim{ClaimKind::NoEmptyPT, 7}));
  EXPECT_EQ(claims[3], (Claim{ClaimKind::NoPT, 8}));
  EXPECT_EQ(claims[4], (Claim{ClaimKind::LambdaAtMost, 2}));
  EXPECT_EQ(claims[5], (Claim{ClaimKind::HullSize, 3}));
  EXPECT_EQ(parse_claims(join_claims(claims)), claims);
  EXPECT_THROW(parse_claim("no-x-hole"), Error);
  EXPECT_THROW(parse_claim("some-5-hole"), Error);
}

TEST(BFT, Examples) {
  const auto a = bft_construct({5, 1});
  EXPECT_EQ(a.points.size(), 6u);
  EXPECT_LE(brute_lambda(a.points), 1u);
  EXPECT_FALSE(brute_convex_kgon(a.points, 5));

  const auto b = bft_construct({6, 2});
  EXPECT_EQ(b.points.size(), 11u);
  EXPECT_LE(brute_lambda(b.points), 2u);
  EXPECT_FALSE(brute_convex_kgon(b.points, 6));

  const auto c = bft_construct({8, 3});
  EXPECT_EQ(c.points.size(), 22u);
  EXPECT_LE(brute_lambda(c.points), 3u);
  EXPECT_TRUE(recheck(c));

  EXPECT_THROW(bft_construct({6, 3}), Error);
  EXPECT_THROW(bft_construct({3, 0}), Error);
}

TEST(BFT, EveryAdmissibleLevelIsCertified) {
  for (int k = 4; k <= 9; ++k) {
    for (int l = 0; 2 * l < k; ++l) {
      const auto cfg = bft_construct({k, l});
      ASSERT_EQ(cfg.points.size(), bft_size(k, l));
      ASSERT_FALSE(general_position_violation(cfg.points));
      ASSERT_LE(brute_lambda(cfg.points), static_cast<std::size_t>(l));
      if (cfg.points.size() <= 14) ASSERT_FALSE(brute_convex_kgon(cfg.points, static_cast<std::size_t>(k)));
      ASSERT_FALSE(find_convex_kgon(PointSet(cfg.points), static_cast<std::size_t>(k)));
    }
  }
}

TEST(BFT, SeededRealizationsAreCertifiedAndReproducible) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto a = bft_construct({7, 3, std::int64_t{1} << 19, seed});
    const auto b = bft_construct({7, 3, std::int64_t{1} << 19, seed});
    ASSERT_EQ(a.points, b.points);
    ASSERT_LE(brute_lambda(a.points), 3u);
    ASSERT_TRUE(recheck(a));
  }
}

TEST(WitnessSearch, FindsAndIsDeterministic) {
  const auto claims = parse_claims("hull=3, no-7-pt");
  const auto a = witness_search(7, claims, 1000, 4);
  const auto b = witness_search(7, claims, 1000, 4);
  ASSERT_TRUE(a);
  ASSERT_TRUE(b);
  EXPECT_EQ(a->points, b->points);
  EXPECT_EQ(a->attempts, b->attempts);
  EXPECT_TRUE(recheck(*a));
  EXPECT_FALSE(witness_search(5, parse_claims("no-4-hole"), 200, 1));
}

TEST(Fixtures, RecheckFromPointsAlone) {
  for (const char* name : {"e4_lower_4pts.txt", "e55_lower_6pts.txt", "e56_lower_8pts.txt",
                           "e58_lower_9pts.txt", "tightness_4interior.txt"}) {
    const auto cfg = read_config_file(std::string(EMPTYPT_FIXTURE_DIR "/") + name);
    EXPECT_FALSE(cfg.certificates.empty()) << name;
    EXPECT_TRUE(recheck(cfg)) << name;
  }
}

TEST(Fixtures, TamperedConfigFailsRecheck) {
  auto cfg = read_config_file(EMPTYPT_FIXTURE_DIR "/e56_lower_8pts.txt");
  cfg.certificates.push_back({ClaimKind::NoHole, 3});
  EXPECT_FALSE(recheck(cfg));
}

TEST(Fixtures, TextRoundTrip) {
  const auto cfg = bft_construct({6, 2});
  std::stringstream buf;
  write_config(buf, cfg);
  const auto back = read_config(buf);
  EXPECT_EQ(back.points, cfg.points);
  EXPECT_EQ(back.certificates, cfg.certificates);
}
