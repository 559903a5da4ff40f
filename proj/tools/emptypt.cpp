#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "emptypt/constructive.hpp"
#include "emptypt/extremal.hpp"
#include "emptypt/harness.hpp"
#include "emptypt/search.hpp"

using namespace emptypt;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitNotFound = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ClaimType table_type(const std::string& table, bool upper) {
  if (table == "E") return upper ? ClaimType::EUpper : ClaimType::ELower;
  if (table == "F") return upper ? ClaimType::FUpper : ClaimType::FLower;
  throw Error(ErrorKind::Parse, "--table must be E or F");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holes, convex gons and pseudo-triangles in planar point sets"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Run the oracles on a point-set file");
  std::string check_file;
  std::size_t check_k = 0, check_l = 0;
  bool check_empty = true;
  check->add_option("file", check_file)->required()->check(CLI::ExistingFile);
  check->add_option("--k", check_k, "k-hole (empty) or convex k-gon (no-empty)");
  check->add_option("--l", check_l, "l-pseudo-triangle");
  check->add_flag("--empty,!--no-empty", check_empty, "require emptiness (default)");

  // construct bft
  auto* construct = app.add_subcommand("construct", "Extremal constructions");
  construct->require_subcommand(1);
  auto* bft = construct->add_subcommand("bft", "Certified level-convex set without a convex k-gon");
  BFTParams bft_params;
  std::string bft_out;
  bft->add_option("--k", bft_params.k)->required();
  bft->add_option("--level", bft_params.level)->required();
  bft->add_option("--seed", bft_params.seed);
  bft->add_option("--scale", bft_params.scale);
  bft->add_option("-o,--output", bft_out);

  // search-witness
  auto* search = app.add_subcommand("search-witness", "Random search for a set satisfying claims");
  std::size_t search_n = 0, search_budget = 100000;
  std::uint64_t search_seed = 0;
  std::string search_claims, search_out;
  search->add_option("--n", search_n)->required();
  search->add_option("--claims", search_claims, "e.g. \"no-5-hole, no-empty-6-pt, hull=3\"")->required();
  search->add_option("--budget", search_budget);
  search->add_option("--seed", search_seed);
  search->add_option("-o,--output", search_out);

  // verify
  auto* verify = app.add_subcommand("verify", "Claim suites");
  verify->require_subcommand(1);
  bool json_out = false;
  std::size_t trials = 1000, slow_trials = 100;
  std::uint64_t seed = 0;
  std::string fixture_dir = EMPTYPT_DEFAULT_FIXTURE_DIR;
  ClaimSpec spec;
  std::string table = "E";
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json_out, "emit JSON");
    sub->add_option("--seed", seed);
  };
  auto* v_upper = verify->add_subcommand("upper", "Sampled upper bound");
  add_common(v_upper);
  v_upper->add_option("--table", table)->check(CLI::IsMember({"E", "F"}));
  v_upper->add_option("--k", spec.k)->required();
  v_upper->add_option("--l", spec.l)->required();
  v_upper->add_option("--n", spec.n)->required();
  v_upper->add_option("--trials", trials);
  v_upper->add_flag("--exhaustive", spec.exhaustive, "every n-subset of a 16-point grid");
  auto* v_lower = verify->add_subcommand("lower", "Certified lower bound");
  add_common(v_lower);
  v_lower->add_option("--table", table)->check(CLI::IsMember({"E", "F"}));
  v_lower->add_option("--k", spec.k)->required();
  v_lower->add_option("--l", spec.l)->required();
  v_lower->add_option("--fixture", spec.fixture, "point-set file; F defaults to the BFT construction");
  auto* v_prop = verify->add_subcommand("property", "Named property checks");
  add_common(v_prop);
  std::vector<std::string> prop_names;
  std::size_t prop_trials = 500;
  v_prop->add_option("names", prop_names, "property names; all when omitted");
  v_prop->add_option("--trials", prop_trials);
  auto* v_tables = verify->add_subcommand("tables", "Every cell of both summary tables");
  add_common(v_tables);
  v_tables->add_option("--trials", trials);
  v_tables->add_option("--slow-trials", slow_trials, "trials for cells with n > 20");
  v_tables->add_option("--fixtures", fixture_dir);

  // trace
  auto* trace = app.add_subcommand("trace", "Run a constructive procedure and dump its descent trace");
  std::string trace_file, trace_op = "empty7pt", trace_out;
  trace->add_option("file", trace_file)->required()->check(CLI::ExistingFile);
  trace->add_option("--op", trace_op)
      ->check(CLI::IsMember({"empty5pt", "empty6pt", "standard7pt", "empty7pt"}));
  trace->add_option("-o,--output", trace_out);

  // render
  auto* render = app.add_subcommand("render", "SVG drawing of a witness JSON file");
  std::string render_in, render_out;
  render->add_option("witness", render_in)->required()->check(CLI::ExistingFile);
  render->add_option("-o,--output", render_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      if (check_k == 0 && check_l == 0) {
        std::cerr << "check: give --k, --l or both\n";
        return kExitError;
      }
      const PointSet s(read_points_file(check_file));
      if (check_k != 0) {
        const auto w = check_empty ? find_k_hole(s, check_k) : find_convex_kgon(s, check_k);
        if (w) {
          emit(witness_json(*w, !check_empty, check_file), "");
          return 0;
        }
      }
      if (check_l != 0) {
        if (const auto w = find_empty_pseudo_triangle(s, check_l, check_empty)) {
          emit(witness_json(*w, check_file), "");
          return 0;
        }
      }
      std::cout << "not found\n";
      return kExitNotFound;
    }
    if (*bft) {
      const auto cfg = bft_construct(bft_params);
      std::ostringstream out;
      write_config(out, cfg);
      emit(out.str(), bft_out);
      return 0;
    }
    if (*search) {
      const auto cfg = witness_search(search_n, parse_claims(search_claims), search_budget, search_seed);
      if (!cfg) {
        std::cout << "not found within " << search_budget << " trials\n";
        return kExitNotFound;
      }
      std::ostringstream out;
      write_config(out, *cfg);
      emit(out.str(), search_out);
      return 0;
    }
    if (*verify) {
      VerificationReport report;
      if (*v_upper || *v_lower) {
        spec.type = table_type(table, v_upper->parsed());
        spec.trials = trials;
        spec.seed = seed;
        report.results.push_back(v_upper->parsed() ? verify_upper(spec) : verify_lower(spec));
      } else if (*v_prop) {
        if (prop_names.empty()) prop_names = property_names();
        for (const auto& name : prop_names) report.results.push_back(verify_property(name, prop_trials, seed));
      } else {
        report = table_report({trials, slow_trials, seed, fixture_dir});
      }
      emit(json_out ? to_json(report) : format_table(report), "");
      return report.passed() ? 0 : kExitFail;
    }
    if (*trace) {
      const PointSet s(read_points_file(trace_file));
      Construction c;
      if (trace_op == "empty5pt") c = empty_5pt_triangular(s);
      if (trace_op == "empty6pt") c = empty_6pt_triangular(s);
      if (trace_op == "standard7pt") c = standard_7pt_triangular(s);
      if (trace_op == "empty7pt") c = empty_7pt_triangular(s);
      emit(trace_json(c), trace_out);
      return 0;
    }
    if (*render) {
      emit(render_svg(read_text(render_in)), render_out);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
