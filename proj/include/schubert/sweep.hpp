#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubert/criterion.hpp"

namespace schubert {

/// One line of sweep output. Serializes to a single compact JSON object
/// with exactly these field names, and parses back losslessly.
struct SweepRecord {
  char type = 'A';
  int rank = 0;
  std::vector<int> word;  // canonical reduced word
  int length = 0;
  std::vector<int64_t> poincare;
  bool palindromic = false;
  std::vector<std::vector<int>> curve_roots;
  std::vector<std::vector<int>> hull_violations;
  std::string verdict;

  /// Condition fields are emitted only when they were computed; a
  /// CRITERION_INAPPLICABLE record omits them.
  bool has_conditions = true;

  static SweepRecord from_verdict(const RootSystem& rs, const Verdict& v);
  std::string to_line() const;
  static SweepRecord from_line(const std::string& line);
  bool operator==(const SweepRecord&) const = default;
};

struct SweepSummary {
  uint64_t total = 0;
  uint64_t smooth = 0;
  uint64_t singular = 0;
  uint64_t conditions_only = 0;

  std::string to_line(char type, int rank) const;
};

struct SweepOptions {
  bool allow_g2 = false;
  size_t interval_budget = kDefaultIntervalBudget;
  int jobs = 1;
  size_t group_budget = 3'000'000;  // E7 passes, E8 needs the explicit knob
};

struct SweepResult {
  std::vector<SweepRecord> records;  // by length, then canonical word lex
  SweepSummary summary;
};

/// Evaluates the criterion on every group element. Record order (and hence
/// the serialized byte stream) is independent of the jobs count: elements
/// are sorted canonically first and each worker writes into its own slots.
SweepResult run_sweep(const RootSystem& rs, const SweepOptions& opts = {});

/// Canonical element order for sweeps: by length, then reduced word
/// lexicographically.
std::vector<WeylElement> sorted_group(const RootSystem& rs, size_t group_budget);

struct OracleReport {
  uint64_t total = 0;
  uint64_t mismatches = 0;
  uint64_t smooth = 0;  // per the criterion verdicts
  std::map<int, uint64_t> mismatch_by_length;
};

/// Cross-validates the criterion against the 3412/4231 pattern test over
/// all of W(A_rank). Type A only.
OracleReport run_type_a_oracle(const RootSystem& rs, const SweepOptions& opts = {});

}  // namespace schubert
