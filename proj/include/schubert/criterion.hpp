#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "schubert/curves.hpp"

namespace schubert {

/// SMOOTH / SINGULAR are geometric claims, valid for the simple types
/// other than G2. For G2 the two conditions do not characterize
/// smoothness: without an override the verdict is CRITERION_INAPPLICABLE
/// (nothing computed); with the override it is CONDITIONS_ONLY, carrying
/// the two condition values but no smoothness claim.
enum class Status { Smooth, Singular, CriterionInapplicable, ConditionsOnly };

std::string_view to_string(Status s);

struct Verdict {
  std::vector<int> word;  // canonical reduced word of w
  int length = 0;
  std::optional<bool> palindromic;  // condition 1, when computed
  std::optional<bool> hull_closed;  // condition 2, when computed
  Status status = Status::CriterionInapplicable;
  // evidence
  PoincarePolynomial poincare;
  std::vector<Root> curve_roots;
  std::vector<Root> hull_violations;
};

struct EvalOptions {
  bool allow_g2 = false;       // emit condition values for G2 (still no claim)
  bool short_circuit = false;  // skip the hull check once palindromicity fails
  size_t interval_budget = kDefaultIntervalBudget;
};

/// The two-condition smoothness test: X(w) is smooth iff the interval
/// Poincare polynomial is palindromic and conv(E(w)) contains no root
/// outside E(w). Both conditions are evaluated (palindromicity first) and
/// full evidence is attached unless short_circuit cuts the hull check after
/// a palindromicity failure.
Verdict is_smooth(const RootSystem& rs, BruhatContext& ctx, const WeylElement& w,
                  const EvalOptions& opts = {});

/// One-line permutation on {1..n}; W(A_{n-1}) in its symmetric-group coat.
struct Permutation {
  std::vector<int> one_line;

  static Permutation identity_perm(int n);
  static Permutation from_one_line(std::vector<int> v);  // validates bijection
  int size() const { return int(one_line.size()); }
  int inversions() const;
  bool operator==(const Permutation&) const = default;
};

/// Type A only (throws otherwise): s_i maps to the transposition (i, i+1).
Permutation weyl_to_permutation(const RootSystem& rs, const WeylElement& w);
WeylElement permutation_to_weyl(const RootSystem& rs, const Permutation& p);

/// Does some subsequence of p form the same relative order as q?
bool contains_pattern(const Permutation& p, const Permutation& q);

/// Independent type-A ground truth: smooth iff p avoids 3412 and 4231.
bool smooth_by_pattern(const Permutation& p);

}  // namespace schubert
