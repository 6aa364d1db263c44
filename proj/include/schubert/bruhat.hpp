#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

inline constexpr size_t kDefaultIntervalBudget = 10'000'000;
inline constexpr int kSubwordOracleMaxLength = 12;

/// Coefficient list of sum_{x <= w} t^{l(x)}: coeffs[k] counts interval
/// elements of length k. Always has coeffs[0] = coeffs[l(w)] = 1.
struct PoincarePolynomial {
  std::vector<int64_t> coeffs;

  int degree() const { return int(coeffs.size()) - 1; }
  bool operator==(const PoincarePolynomial&) const = default;
};

bool is_palindromic(const PoincarePolynomial& p);

/// The full lower interval [e, w], downward closed under Bruhat covers.
/// Elements are sorted by (length, action matrix bytes) so the order is
/// deterministic.
struct BruhatInterval {
  WeylElement top;
  std::vector<WeylElement> elements;
};

/// Bruhat comparisons and interval enumeration for one root system.
/// Owns the memo table for the lifting-property recursion; NOT safe for
/// concurrent use -- give each worker thread its own context (results are
/// identical either way, the functions are pure).
class BruhatContext {
 public:
  explicit BruhatContext(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }

  /// s_beta per positive root, indexed like rs.positive.
  const std::vector<WeylElement>& reflections() const { return reflections_; }

  /// x <= w in Bruhat order, by the lifting-property recursion:
  /// pick the smallest s with sw < w; descend to (sx, sw) or (x, sw).
  bool leq(const WeylElement& x, const WeylElement& w);

  BruhatInterval lower_interval(const WeylElement& w,
                                size_t budget = kDefaultIntervalBudget);

  PoincarePolynomial poincare_polynomial(const WeylElement& w,
                                         size_t budget = kDefaultIntervalBudget);

  size_t memo_size() const { return memo_.size(); }

 private:
  struct PairKey {
    std::array<int8_t, 2 * kMaxRank * kMaxRank> bytes;
    bool operator==(const PairKey&) const = default;
  };
  struct PairKeyHash {
    size_t operator()(const PairKey& k) const;
  };

  const RootSystem* rs_;
  std::vector<WeylElement> reflections_;  // s_beta per positive root
  std::unordered_map<PairKey, bool, PairKeyHash> memo_;
};

/// Ground-truth comparison for tests, independent of the lifting recursion:
/// x <= w iff some subsequence of a fixed reduced word of w multiplies to x.
/// Exhaustive over all 2^l(w) subsequences; refuses (OracleGuardError) when
/// l(w) exceeds the guard.
bool subword_leq_oracle(const WeylElement& x, const WeylElement& w,
                        int max_length = kSubwordOracleMaxLength);

}  // namespace schubert
