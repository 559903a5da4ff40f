#pragma once

// Extremal configurations: the layered column construction that is
// level-convex with no convex k-gon, randomized witness search, and the
// closed form of M_nu.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "emptypt/geom.hpp"

namespace emptypt {

enum class ClaimKind {
  NoHole,       // no k-hole
  NoConvexGon,  // no convex k-gon
  NoEmptyPT,    // no empty l-pseudo-triangle
  NoPT,         // no l-pseudo-triangle
  LambdaAtMost, // lambda-convex with the given value
  HullSize,     // convex hull has exactly this many vertices
};

struct Claim {
  ClaimKind kind = ClaimKind::NoHole;
  std::size_t value = 0;

  friend bool operator==(const Claim&, const Claim&) = default;
};

/// Text form: no-5-hole, no-6-gon, no-empty-7-pt, no-7-pt, lambda<=2, hull=3.
std::string to_string(const Claim& c);
Claim parse_claim(const std::string& text);
/// Comma- or space-separated list of claims.
std::vector<Claim> parse_claims(const std::string& text);
std::string join_claims(const std::vector<Claim>& claims);

/// Runs the oracle behind the claim.
bool check_claim(const PointSet& s, const Claim& c);

struct CertifiedConfig {
  std::vector<Point> points;
  std::vector<Claim> certificates;
  std::size_t attempts = 1;
};

/// Re-runs every certificate from the points alone.
bool recheck(const CertifiedConfig& config);

struct BFTParams {
  int k = 5;
  int level = 1;
  std::int64_t scale = std::int64_t{1} << 19;  // radius of the base polygon
  std::uint64_t seed = 0;
};

inline constexpr int kBFTMaxAttempts = 64;

/// (k-3)(level+1)+2.
std::size_t bft_size(int k, int level);

/// Points in general position, level-convex, without a convex k-gon and
/// without a (level+4)-pseudo-triangle; all certified by the oracles.
CertifiedConfig bft_construct(const BFTParams& params);

/// Random sets of n points until one satisfies every claim. A hull=h claim
/// makes the sampler draw h points in convex position plus interior points.
/// Trial i uses the engine trial_rng(seed, i); the smallest successful index
/// wins.
std::optional<CertifiedConfig> witness_search(std::size_t n, const std::vector<Claim>& claims,
                                              std::size_t budget, std::uint64_t seed);

/// M_nu: 2^((nu+1)/2)-1 for odd nu, 3*2^(nu/2-1)-1 for even nu; nu >= 3.
std::int64_t m_value(int nu);

/// Point-set text format with a "# claims: ..." header line.
void write_config(std::ostream& out, const CertifiedConfig& config);
CertifiedConfig read_config(std::istream& in);
CertifiedConfig read_config_file(const std::string& path);

}  // namespace emptypt
