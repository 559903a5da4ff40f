#pragma once

// Verification of E(k,l) and F(k,l) values at desk scale. Upper bounds are
// sampled (evidence), lower bounds are certified on concrete sets (proof).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "emptypt/constructive.hpp"
#include "emptypt/extremal.hpp"
#include "emptypt/geom.hpp"
#include "emptypt/search.hpp"

namespace emptypt {

enum class ClaimType { EUpper, ELower, FUpper, FLower, Property };

const char* to_string(ClaimType t);

struct ClaimSpec {
  ClaimType type = ClaimType::EUpper;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t n = 0;  // set size under test; 0 means derived from the witness
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string fixture;  // lower bounds: path of a point-set file
  std::string name;     // properties
  bool exhaustive = false;  // upper bounds: every n-subset of the candidate grid instead of sampling
};

/// Candidate positions for exhaustive upper-bound checks: a 4x4 lattice with
/// fixed offsets that put it in general position.
std::vector<Point> exhaustive_grid();

enum class Outcome { Pass, Fail, Skipped };

const char* to_string(Outcome o);

struct ClaimResult {
  std::string claim;
  Outcome outcome = Outcome::Skipped;
  std::string mode;  // sampled, certified, trivial, skipped
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> failing_trial;
  std::vector<Point> counterexample;
  std::string note;
  double seconds = 0;
};

struct Bound {
  std::size_t value = 0;  // the bound being checked
  ClaimResult result;
};

struct TableCell {
  std::string table;  // "E" or "F"
  std::size_t k = 0;
  std::size_t l = 0;
  std::string expected;  // value as printed in the table
  std::optional<Bound> lower;
  std::optional<Bound> upper;
  Outcome outcome = Outcome::Skipped;
  std::string status;  // PASS, FAIL, PARTIAL, SKIPPED
  std::string note;
};

struct VerificationReport {
  std::vector<ClaimResult> results;
  std::vector<TableCell> cells;

  bool passed() const;
};

/// Samples `trials` random sets of size n and checks the disjunction
/// (k-hole or empty l-PT for E; convex k-gon or l-PT for F). With
/// `exhaustive` set, every n-subset of exhaustive_grid() is checked instead
/// (n <= 10); the failing trial is then the subset's rank.
ClaimResult verify_upper(const ClaimSpec& claim);

/// Certifies that the fixture (E) or BFT(k, min(l-4, (k-1)/2)) (F) contains neither
/// structure. The proven bound is then size + 1.
ClaimResult verify_lower(const ClaimSpec& claim);

/// Named property checks; unknown names throw UnknownName.
ClaimResult verify_property(const std::string& name, std::size_t trials = 500,
                            std::uint64_t seed = 0);
std::vector<std::string> property_names();

struct TableOptions {
  std::size_t trials = 1000;
  std::size_t slow_trials = 100;  // cells with n > 20
  std::uint64_t seed = 0;
  std::string fixture_dir = "fixtures";
};

/// Every cell of the two summary tables, with lower and upper checks.
VerificationReport table_report(const TableOptions& options);

/// JSON text. Wall-clock times are included only when asked for, so reports
/// are byte-identical across runs.
std::string to_json(const VerificationReport& report, bool timing = false);
std::string to_json(const ClaimResult& result, bool timing = false);
std::string format_table(const VerificationReport& report);

/// Witness JSON: type, vertices, corners, chains, class, empty, ambient.
std::string witness_json(const PTWitness& w, const std::string& ambient);
std::string witness_json(const HoleWitness& w, bool convex_gon, const std::string& ambient);
std::string trace_json(const Construction& c);

/// SVG drawing of a witness JSON document; ambient points are drawn when the
/// document's ambient field is an inline point list or a readable file.
std::string render_svg(const std::string& witness_json_text);

}  // namespace emptypt
