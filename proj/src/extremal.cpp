#include "emptypt/extremal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "emptypt/parallel.hpp"
#include "emptypt/sample.hpp"
#include "emptypt/search.hpp"

namespace emptypt {

std::string to_string(const Claim& c) {
  const std::string v = std::to_string(c.value);
  switch (c.kind) {
    case ClaimKind::NoHole: return "no-" + v + "-hole";
    case ClaimKind::NoConvexGon: return "no-" + v + "-gon";
    case ClaimKind::NoEmptyPT: return "no-empty-" + v + "-pt";
    case ClaimKind::NoPT: return "no-" + v + "-pt";
    case ClaimKind::LambdaAtMost: return "lambda<=" + v;
    case ClaimKind::HullSize: return "hull=" + v;
  }
  return "?";
}

namespace {

std::size_t parse_count(const std::string& digits, const std::string& text) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 6) {
    throw Error(ErrorKind::Parse, "bad claim \"" + text + "\"");
  }
  return static_cast<std::size_t>(std::stoul(digits));
}

bool strip(std::string& s, const std::string& prefix, const std::string& suffix) {
  if (s.size() < prefix.size() + suffix.size()) return false;
  if (s.compare(0, prefix.size(), prefix) != 0) return false;
  if (s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0) return false;
  s = s.substr(prefix.size(), s.size() - prefix.size() - suffix.size());
  return true;
}

}  // namespace

Claim parse_claim(const std::string& text) {
  std::string s = text;
  if (strip(s, "no-empty-", "-pt")) return {ClaimKind::NoEmptyPT, parse_count(s, text)};
  s = text;
  if (strip(s, "no-", "-hole")) return {ClaimKind::NoHole, parse_count(s, text)};
  s = text;
  if (strip(s, "no-", "-gon")) return {ClaimKind::NoConvexGon, parse_count(s, text)};
  s = text;
  if (strip(s, "no-", "-pt")) return {ClaimKind::NoPT, parse_count(s, text)};
  s = text;
  if (strip(s, "lambda<=", "")) return {ClaimKind::LambdaAtMost, parse_count(s, text)};
  s = text;
  if (strip(s, "hull=", "")) return {ClaimKind::HullSize, parse_count(s, text)};
  throw Error(ErrorKind::Parse, "unknown claim \"" + text + "\"");
}

std::vector<Claim> parse_claims(const std::string& text) {
  std::vector<Claim> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '{' || ch == '}') {
      if (!cur.empty()) out.push_back(parse_claim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

std::string join_claims(const std::vector<Claim>& claims) {
  std::string out;
  for (const Claim& c : claims) {
    if (!out.empty()) out += ", ";
    out += to_string(c);
  }
  return out;
}

bool check_claim(const PointSet& s, const Claim& c) {
  switch (c.kind) {
    case ClaimKind::NoHole: return c.value < 3 ? false : !find_k_hole(s, c.value);
    case ClaimKind::NoConvexGon: return c.value < 3 ? false : !find_convex_kgon(s, c.value);
    case ClaimKind::NoEmptyPT: return !find_empty_pseudo_triangle(s, c.value, true);
    case ClaimKind::NoPT: return !find_empty_pseudo_triangle(s, c.value, false);
    case ClaimKind::LambdaAtMost: return s.size() < 3 || lambda_convexity(s) <= c.value;
    case ClaimKind::HullSize: return convex_hull(s).hull.size() == c.value;
  }
  return false;
}

bool recheck(const CertifiedConfig& config) {
  if (general_position_violation(config.points)) return false;
  const PointSet s(config.points);
  for (const Claim& c : config.certificates) {
    if (!check_claim(s, c)) return false;
  }
  return true;
}

std::size_t bft_size(int k, int level) {
  return static_cast<std::size_t>((k - 3) * (level + 1) + 2);
}

namespace {

// Column j of base vertex i runs from s_i toward a target base vertex on a
// concave arc, bent toward the other end vertex.
constexpr double kColumnSpan = 0.05;
constexpr double kBends[] = {1.0, 0.75, 1.5, 0.5, 2.0};

std::vector<Point> bft_points(int k, int level, std::int64_t scale, double bend, Rng* jitter,
                              std::int64_t amplitude) {
  const int m = k - 1;
  const double r = static_cast<double>(scale);
  std::vector<std::array<double, 2>> base;
  for (int i = 0; i < m; ++i) {
    const double a = 2 * std::numbers::pi * i / m - std::numbers::pi / 2;
    base.push_back({r * std::cos(a), r * std::sin(a)});
  }
  std::uniform_int_distribution<std::int64_t> d(-amplitude, amplitude);
  auto round = [&](double x, double y) {
    Point p{std::llround(x), std::llround(y)};
    if (jitter != nullptr) {
      p.x += d(*jitter);
      p.y += d(*jitter);
    }
    return p;
  };
  std::vector<Point> pts;
  for (const auto& [x, y] : base) pts.push_back(round(x, y));
  const int half = (k - 1) / 2;
  for (int i = 2; i <= k - 2; ++i) {
    const auto [xi, yi] = base[static_cast<std::size_t>(i - 1)];
    const bool to_first = i <= half;
    const auto [tx, ty] = to_first ? base.front() : base.back();
    const auto [ox, oy] = to_first ? base.back() : base.front();
    const double dx = tx - xi, dy = ty - yi;
    const double len = std::hypot(dx, dy);
    double nx = -dy / len, ny = dx / len;
    if ((ox - xi) * nx + (oy - yi) * ny < 0) {
      nx = -nx;
      ny = -ny;
    }
    for (int j = 1; j <= level; ++j) {
      const double t = kColumnSpan * j / level;
      const double off = bend * len * t * (2 * kColumnSpan - t);
      pts.push_back(round(xi + t * dx + off * nx, yi + t * dy + off * ny));
    }
  }
  return pts;
}

}  // namespace

CertifiedConfig bft_construct(const BFTParams& p) {
  if (p.k < 4 || p.level < 0 || 2 * p.level >= p.k) {
    throw Error(ErrorKind::OutOfRange, "bft: need k >= 4 and 0 <= level < k/2");
  }
  if (p.scale < 1024 || p.scale > kCoordLimit / 2) {
    throw Error(ErrorKind::OutOfRange, "bft: scale must lie in [1024, 2^19]");
  }
  const std::vector<Claim> claims{
      {ClaimKind::LambdaAtMost, static_cast<std::size_t>(p.level)},
      {ClaimKind::NoConvexGon, static_cast<std::size_t>(p.k)},
      {ClaimKind::NoPT, static_cast<std::size_t>(p.level + 4)},
  };
  for (int attempt = 0; attempt < kBFTMaxAttempts; ++attempt) {
    const double bend = kBends[static_cast<std::size_t>(attempt) % std::size(kBends)];
    Rng rng = trial_rng(p.seed, static_cast<std::uint64_t>(attempt));
    const bool jitter = p.seed != 0 || attempt > 0;
    const std::int64_t amplitude = std::max<std::int64_t>(1, p.scale / 16384 / (1 + attempt));
    auto pts = bft_points(p.k, p.level, p.scale, bend, jitter ? &rng : nullptr, amplitude);
    if (pts.size() != bft_size(p.k, p.level) || general_position_violation(pts)) continue;
    CertifiedConfig config{std::move(pts), claims, static_cast<std::size_t>(attempt + 1)};
    if (recheck(config)) return config;
  }
  throw Error(ErrorKind::Certification,
              "bft: no certified realization after " + std::to_string(kBFTMaxAttempts) + " attempts");
}

std::optional<CertifiedConfig> witness_search(std::size_t n, const std::vector<Claim>& claims,
                                              std::size_t budget, std::uint64_t seed) {
  if (n < 3 || n > kMaxOracleSize) throw Error(ErrorKind::OutOfRange, "witness search: bad n");
  std::size_t hull = 0;
  for (const Claim& c : claims) {
    if (c.kind == ClaimKind::HullSize) hull = c.value;
  }
  if (hull != 0 && (hull < 3 || hull > n)) {
    throw Error(ErrorKind::OutOfRange, "witness search: hull size must lie in [3, n]");
  }
  auto sample = [&](std::size_t i) {
    Rng rng = trial_rng(seed, i);
    if (hull == 3) return random_triangular_hull(n - 3, rng);
    if (hull != 0) return random_hull_with_interior(hull, n - hull, rng);
    return random_general_position(n, rng);
  };
  const auto hit = first_index(budget, [&](std::size_t i) {
    const PointSet s(sample(i));
    for (const Claim& c : claims) {
      if (!check_claim(s, c)) return false;
    }
    return true;
  });
  if (!hit) return std::nullopt;
  return CertifiedConfig{sample(*hit), claims, *hit + 1};
}

std::int64_t m_value(int nu) {
  if (nu < 3 || nu > 60) throw Error(ErrorKind::OutOfRange, "m_value: need 3 <= nu <= 60");
  if (nu % 2 == 1) return (std::int64_t{1} << ((nu + 1) / 2)) - 1;
  return 3 * (std::int64_t{1} << (nu / 2 - 1)) - 1;
}

void write_config(std::ostream& out, const CertifiedConfig& config) {
  write_points(out, config.points, {"claims: " + join_claims(config.certificates)});
}

CertifiedConfig read_config(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  CertifiedConfig config;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto pos = line.find("# claims:");
    if (pos == 0) config.certificates = parse_claims(line.substr(9));
  }
  std::istringstream pts(text);
  config.points = parse_points(pts);
  return config;
}

CertifiedConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return read_config(in);
}

}  // namespace emptypt
