#pragma once

#include <optional>
#include <vector>

#include "schubert/bruhat.hpp"
#include "schubert/rational.hpp"

namespace schubert {

/// E(w): the negative roots -beta with s_beta <= w. Stands in for the span
/// of T-stable curve directions through the identity. Kept in the pinned
/// root order (by the index of the corresponding positive root).
struct CurveSet {
  WeylElement w;
  std::vector<Root> roots;

  bool contains(const Root& r) const;
};

CurveSet curve_roots(const RootSystem& rs, BruhatContext& ctx, const WeylElement& w);

/// Exact convex-combination feasibility: does `point` lie in the closed
/// convex hull of `generators`? Decided by phase-1 simplex (Bland's rule)
/// over arbitrary-precision rationals; no tolerance anywhere. Empty
/// generator set gives false. When feasible and `multipliers` is non-null,
/// it receives one lambda per generator with lambda >= 0, sum = 1,
/// sum lambda_i g_i = point, re-verified exactly before returning.
bool in_convex_hull(const Root& point, const std::vector<Root>& generators,
                    std::vector<Rat>* multipliers = nullptr);

/// Every root inside conv(E(w)), and the ones that E(w) is missing.
/// All roots are offered as candidates; a positive root passing the hull
/// test trips an always-on invariant check (only nonpositive vectors can be
/// convex combinations of negative roots).
struct HullReport {
  std::vector<Root> members;
  std::vector<Root> violations;  // members not already in E(w)
};

HullReport hull_report(const RootSystem& rs, const CurveSet& cs);

/// Condition 2: conv(E(w)) contains no root outside E(w).
bool hull_closed(const RootSystem& rs, const CurveSet& cs);

}  // namespace schubert
