// Command-line front end: single-element smoothness checks, full Weyl group
// sweeps, and cross-validation against the type-A pattern oracle.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schubert/errors.hpp"
#include "schubert/sweep.hpp"

namespace {

using namespace schubert;

constexpr int kExitSmooth = 0;
constexpr int kExitSingular = 10;
constexpr int kExitInapplicable = 20;
constexpr int kExitResource = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 70;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

struct CheckArgs {
  std::string type;
  int rank = 0;
  std::string word;
  bool word_given = false;
  std::string perm;
  bool json = false;
  bool explain = false;
  bool allow_g2 = false;
  size_t max_interval = kDefaultIntervalBudget;
};

struct SweepArgs {
  std::string type;
  int rank = 0;
  std::string out_path;
  int jobs = 1;
  bool allow_g2 = false;
  bool i_know = false;
  size_t max_interval = kDefaultIntervalBudget;
};

struct OracleArgs {
  std::string type = "A";
  int rank = 0;
  int max_rank = 5;
  size_t max_interval = kDefaultIntervalBudget;
};

CartanType parse_type(const std::string& t, int rank) {
  if (t.size() != 1) throw std::invalid_argument("--type expects a single letter A..G");
  char letter = char(std::toupper(static_cast<unsigned char>(t[0])));
  return CartanType::make(letter, rank);  // throws on inadmissible pairs
}

void print_root_list(const std::vector<Root>& roots, const char* label) {
  std::cout << label << ":\n";
  for (const Root& r : roots) std::cout << "  " << join_ints(r.coords()) << "\n";
}

int exit_code_for(Status s) {
  switch (s) {
    case Status::Smooth: return kExitSmooth;
    case Status::Singular: return kExitSingular;
    default: return kExitInapplicable;
  }
}

int run_check(const CheckArgs& args) {
  CartanType ct = parse_type(args.type, args.rank);
  if (!args.perm.empty() && args.word_given)
    throw std::invalid_argument("--word and --perm are mutually exclusive");
  RootSystem rs = build_root_system(ct);
  BruhatContext ctx(rs);

  WeylElement w = identity(rs);
  if (!args.perm.empty()) {
    if (ct.letter != 'A') throw std::invalid_argument("--perm is only valid for type A");
    w = permutation_to_weyl(rs, Permutation::from_one_line(parse_int_list(args.perm)));
  } else {
    w = from_word(rs, parse_int_list(args.word));
  }

  EvalOptions opts;
  opts.allow_g2 = args.allow_g2;
  opts.interval_budget = args.max_interval;
  Verdict v = is_smooth(rs, ctx, w, opts);

  if (args.json) {
    std::cout << SweepRecord::from_verdict(rs, v).to_line() << "\n";
    return exit_code_for(v.status);
  }

  std::cout << ct.name() << "  w = [" << join_ints(v.word) << "]  length " << v.length << "\n";
  if (v.status == Status::CriterionInapplicable) {
    std::cout << "verdict CRITERION_INAPPLICABLE\n"
              << "the two-condition criterion does not characterize type G2; rerun with\n"
              << "--allow-g2 to see the condition values (they carry no claim)\n";
    return kExitInapplicable;
  }

  std::cout << "poincare [";
  for (size_t i = 0; i < v.poincare.coeffs.size(); ++i)
    std::cout << (i ? "," : "") << v.poincare.coeffs[i];
  std::cout << "]  palindromic " << (*v.palindromic ? "yes" : "no") << "\n";
  std::cout << "|E(w)| " << v.curve_roots.size() << "  hull violations "
            << v.hull_violations.size() << "\n";
  if (args.explain) {
    print_root_list(v.curve_roots, "curve roots E(w)");
    print_root_list(v.hull_violations, "hull violations");
  }
  if (v.status == Status::ConditionsOnly) {
    std::cout << "verdict CONDITIONS_ONLY (condition values only; in type G2 they do not "
                 "decide nonsingularity)\n";
  } else {
    std::cout << "verdict " << to_string(v.status) << "\n";
  }
  return exit_code_for(v.status);
}

int run_sweep_cmd(const SweepArgs& args) {
  CartanType ct = parse_type(args.type, args.rank);
  SweepOptions opts;
  opts.allow_g2 = args.allow_g2;
  opts.interval_budget = args.max_interval;
  opts.jobs = args.jobs;
  uint64_t order = weyl_order(ct);
  if (order > opts.group_budget) {
    if (!args.i_know)
      throw std::invalid_argument("W(" + ct.name() + ") has " + std::to_string(order) +
                                  " elements; pass --i-know to sweep it anyway");
    opts.group_budget = order;
  }

  SweepResult res = run_sweep(build_root_system(ct), opts);

  if (!args.out_path.empty()) {
    // stage to a temp file so a failed run never leaves partial output
    std::filesystem::path target(args.out_path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::invalid_argument("cannot open output file " + tmp.string());
      for (const SweepRecord& rec : res.records) out << rec.to_line() << "\n";
    }
    std::filesystem::rename(tmp, target);
  } else {
    for (const SweepRecord& rec : res.records) std::cout << rec.to_line() << "\n";
  }
  std::cout << res.summary.to_line(ct.letter, ct.rank) << "\n";
  return 0;
}

int run_oracle_cmd(const OracleArgs& args) {
  CartanType ct = parse_type(args.type, args.rank);
  if (ct.letter != 'A') throw std::invalid_argument("oracle requires --type A");
  if (ct.rank > args.max_rank)
    throw std::invalid_argument("oracle rank " + std::to_string(ct.rank) +
                                " exceeds the configured maximum " +
                                std::to_string(args.max_rank));
  SweepOptions opts;
  opts.interval_budget = args.max_interval;
  OracleReport rep = run_type_a_oracle(build_root_system(ct), opts);
  std::cout << "oracle " << ct.name() << ": " << rep.total << " elements, " << rep.mismatches
            << " mismatches, smooth " << rep.smooth << "\n";
  if (rep.mismatches > 0) {
    std::cout << "mismatches by length:\n";
    for (const auto& [len, count] : rep.mismatch_by_length)
      std::cout << "  length " << len << ": " << count << "\n";
    return kExitSingular;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert variety smoothness from Weyl group combinatorics"};
  app.require_subcommand(1);

  CheckArgs check;
  CLI::App* c = app.add_subcommand("check", "decide smoothness of one X(w)");
  c->add_option("--type", check.type, "Cartan type letter A..G")->required();
  c->add_option("--rank", check.rank, "rank")->required();
  auto* wopt = c->add_option("--word", check.word,
                             "comma-separated simple indices; empty for the identity");
  c->add_option("--perm", check.perm, "one-line permutation (type A)");
  c->add_flag("--json", check.json, "emit a single machine-readable record line");
  c->add_flag("--explain", check.explain, "print full evidence");
  c->add_flag("--allow-g2", check.allow_g2, "emit condition values for G2 (no claim)");
  c->add_option("--max-interval", check.max_interval, "Bruhat interval element budget");

  SweepArgs sweep;
  CLI::App* s = app.add_subcommand("sweep", "evaluate every element of W");
  s->add_option("--type", sweep.type, "Cartan type letter A..G")->required();
  s->add_option("--rank", sweep.rank, "rank")->required();
  s->add_option("--out", sweep.out_path, "write record lines to this file (atomically)");
  s->add_option("--jobs", sweep.jobs, "worker threads")->check(CLI::PositiveNumber);
  s->add_flag("--allow-g2", sweep.allow_g2, "sweep G2 in conditions-only mode");
  s->add_flag("--i-know", sweep.i_know, "permit the E8 sweep (huge)");
  s->add_option("--max-interval", sweep.max_interval, "Bruhat interval element budget");

  OracleArgs oracle;
  CLI::App* o = app.add_subcommand("oracle", "cross-check the criterion against 3412/4231");
  o->add_option("--type", oracle.type, "must be A");
  o->add_option("--rank", oracle.rank, "rank")->required();
  o->add_option("--max-rank", oracle.max_rank, "largest admitted oracle rank");
  o->add_option("--max-interval", oracle.max_interval, "Bruhat interval element budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c->parsed()) {
      check.word_given = wopt->count() > 0;
      return run_check(check);
    }
    if (s->parsed()) return run_sweep_cmd(sweep);
    if (o->parsed()) return run_oracle_cmd(oracle);
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
