// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "emptypt/constructive.hpp"
#include "emptypt/extremal.hpp"
#include "emptypt/harness.hpp"
#include "emptypt/sample.hpp"
#include "emptypt/search.hpp"

using namespace emptypt;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why << msg;
    }
  }
};

bool valid_pt(const PointSet& s, const PTWitness& w, std::size_t size) {
  const auto cls = classify_polygon(w.pt.polygon);
  return w.pt.size() == size && cls.kind == PolygonKind::PseudoTriangle &&
         is_empty_in(w.pt.polygon, s.points()) && verify_pseudo_triangle(s, w, size);
}

void c1(Check& c) {
  for (std::uint64_t t = 0; t < 1000 && c.ok; ++t) {
    Rng rng = trial_rng(1001, t);
    const PointSet s(random_triangular_hull(2 + t % 7, rng));
    const auto r = empty_5pt_triangular(s);
    c.require(!r.oracle_fallback && valid_pt(s, r.witness, 5), "trial " + std::to_string(t));
  }
}

void c2(Check& c) {
  for (std::uint64_t t = 0; t < 1000 && c.ok; ++t) {
    Rng rng = trial_rng(1002, t);
    const PointSet s(random_triangular_hull(3 + t % 10, rng));
    const auto r = empty_6pt_triangular(s);
    c.require(!r.oracle_fallback && r.witness.pt.cls == PtClass::Standard && valid_pt(s, r.witness, 6) &&
                  r.trace.strictly_decreasing(),
              "trial " + std::to_string(t));
  }
}

void c3(Check& c) {
  for (std::uint64_t t = 0; t < 1000 && c.ok; ++t) {
    Rng rng = trial_rng(1003, t);
    const PointSet s(random_triangular_hull(5 + t % 10, rng));
    const auto r = empty_7pt_triangular(s);
    c.require(!r.oracle_fallback && r.diagnostics.empty() && valid_pt(s, r.witness, 7),
              "trial " + std::to_string(t));
  }
  const auto cfg = read_config_file(EMPTYPT_FIXTURE_DIR "/tightness_4interior.txt");
  const PointSet s(cfg.points);
  c.require(s.size() == 7 && convex_hull(s).hull.size() == 3, "tightness fixture shape");
  c.require(!find_empty_pseudo_triangle(s, 7, false), "tightness fixture has a 7-PT");
}

void c4(Check& c) {
  const auto r = verify_property("obs2-shortening", 500, 0);
  c.require(r.outcome == Outcome::Pass, "failing trial " + std::to_string(r.failing_trial.value_or(0)));
}

void c5(Check& c) {
  for (std::size_t k = 5; k <= 8; ++k) {
    for (std::size_t l : {5u, 6u}) {
      const int level = static_cast<int>(l - 4);
      const auto cfg = bft_construct({static_cast<int>(k), level});
      const std::size_t size = l == 5 ? 2 * k - 4 : 3 * k - 7;
      c.require(cfg.points.size() == size && recheck(cfg),
                "BFT(" + std::to_string(k) + "," + std::to_string(level) + ")");
      ClaimSpec u;
      u.type = ClaimType::FUpper;
      u.k = k;
      u.l = l;
      u.n = size + 1;
      u.trials = 1000;
      const auto r = verify_upper(u);
      c.require(r.outcome == Outcome::Pass, r.claim);
    }
  }
}

void c6(Check& c) {
  struct Cell {
    std::size_t k, l, value;
    const char* fixture;
  };
  const Cell cells[] = {{5, 5, 7, "e55_lower_6pts.txt"}, {5, 6, 9, "e56_lower_8pts.txt"},
                        {5, 7, 9, "e56_lower_8pts.txt"}, {5, 8, 10, "e58_lower_9pts.txt"},
                        {4, 5, 5, "e4_lower_4pts.txt"},  {4, 6, 5, "e4_lower_4pts.txt"},
                        {4, 7, 5, "e4_lower_4pts.txt"},  {4, 8, 5, "e4_lower_4pts.txt"}};
  for (const Cell& x : cells) {
    ClaimSpec lo;
    lo.type = ClaimType::ELower;
    lo.k = x.k;
    lo.l = x.l;
    lo.fixture = std::string(EMPTYPT_FIXTURE_DIR "/") + x.fixture;
    const auto rl = verify_lower(lo);
    c.require(rl.outcome == Outcome::Pass && rl.n + 1 == x.value, rl.claim);
    ClaimSpec up = lo;
    up.type = ClaimType::EUpper;
    up.n = x.value;
    up.trials = 1000;
    const auto ru = verify_upper(up);
    c.require(ru.outcome == Outcome::Pass, ru.claim);
  }
}

void c7(Check& c) {
  const std::int64_t want[] = {3, 5, 7, 11, 15, 23};
  for (int nu = 3; nu <= 8; ++nu) {
    c.require(m_value(nu) == want[nu - 3], "nu=" + std::to_string(nu));
  }
}

void c8(Check& c) {
  for (const char* name : {"lemma4-octagon", "5hole-9pts", "E(k,4)=k", "splitter-sum"}) {
    const auto r = verify_property(name, 500, 0);
    c.require(r.outcome == Outcome::Pass, name);
  }
}

void c9(Check& c) {
  for (int k = 4; k <= 9; ++k) {
    for (int l = 0; 2 * l < k; ++l) {
      const auto cfg = bft_construct({k, l});
      const PointSet s(cfg.points);
      c.require(cfg.points.size() == bft_size(k, l) && !general_position_violation(cfg.points) &&
                    lambda_convexity(s) <= static_cast<std::size_t>(l) &&
                    !find_convex_kgon(s, static_cast<std::size_t>(k)),
                "BFT(" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
  }
}

std::string run(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  pclose(p);
  return out;
}

void c10(Check& c) {
  const std::string cmd = std::string("\"") + EMPTYPT_CLI + "\" verify tables --json --seed 0";
  const auto a = run(cmd);
  const auto b = run(cmd);
  c.require(!a.empty() && a.find("\"cells\"") != std::string::npos, "no report produced");
  c.require(a == b, "reports differ");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"empty 5-PT construction agrees with the oracle on 1000 sets", c1},
      {"standard empty 6-PT descent on 1000 sets", c2},
      {"empty 7-PT construction on 1000 sets, tightness fixture", c3},
      {"mountain shortening on 500 empty mountains", c4},
      {"F(k,5)=2k-3 and F(k,6)=3k-6 for k=5..8", c5},
      {"E(5,5)=7, E(5,6)=E(5,7)=9, E(5,8)=10, E(4,l)=5", c6},
      {"M_nu for nu=3..8", c7},
      {"property suite", c8},
      {"BFT certification for 4<=k<=9, l<k/2", c9},
      {"verify tables --json is byte-identical across runs", c10},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d  %-60s %7.2fs%s%s\n", c.ok ? "PASS" : "FAIL", index, name, secs,
                c.ok ? "" : "  ", c.why.str().c_str());
    if (!c.ok) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
