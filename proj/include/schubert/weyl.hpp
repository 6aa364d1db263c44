#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schubert/rootsys.hpp"

namespace schubert {

/// Column-major rank x rank integer matrix acting on simple-root
/// coordinates; column i holds the coordinates of the image of alpha_i.
/// Every column of a Weyl action matrix is itself a root.
struct ActionMatrix {
  std::array<int8_t, kMaxRank * kMaxRank> m{};

  int at(int row, int col) const { return m[col * kMaxRank + row]; }
  void set(int row, int col, int v) { m[col * kMaxRank + row] = int8_t(v); }
  bool operator==(const ActionMatrix&) const = default;
};

/// A Weyl group element in canonical form: the action matrix (with its
/// inverse alongside, so both left and right descent tests are cheap) plus
/// the length, which is always recomputed from the inversion count and
/// never trusted from word length. Immutable; equality and hashing go by
/// the action matrix. The ambient RootSystem must outlive the element.
class WeylElement {
 public:
  const RootSystem* rs = nullptr;
  ActionMatrix mat;   // w
  ActionMatrix inv;   // w^{-1}
  int32_t len = 0;

  int length() const { return len; }
  Root apply(const Root& v) const;
  Root apply_inverse(const Root& v) const;

  /// w(alpha_i) is negative, i.e. l(w s_i) = l(w) - 1. 0-based i.
  bool right_descent(int i) const;
  /// w^{-1}(alpha_i) is negative, i.e. l(s_i w) = l(w) - 1. 0-based i.
  bool left_descent(int i) const;

  bool is_identity() const { return len == 0; }
  bool operator==(const WeylElement& o) const { return rs == o.rs && mat == o.mat; }
};

struct WeylHash {
  size_t operator()(const WeylElement& w) const;
};

WeylElement identity(const RootSystem& rs);

/// Product of simple reflections s_{i1}...s_{ik}; indices are 1-based and
/// must lie in 1..rank. The word need not be reduced.
WeylElement from_word(const RootSystem& rs, std::span<const int> word);
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

WeylElement multiply(const WeylElement& x, const WeylElement& y);
WeylElement inverse(const WeylElement& x);

/// x * s_i and s_i * x for a single 0-based simple index; cheaper than a
/// general product because the length moves by exactly one.
WeylElement mul_simple_right(const WeylElement& x, int i);
WeylElement mul_simple_left(int i, const WeylElement& x);

/// The reflection s_beta for a positive root beta, as a group element.
WeylElement reflection_element(const RootSystem& rs, const Root& beta);

/// All reflections s_beta, indexed like rs.positive.
std::vector<WeylElement> all_reflections(const RootSystem& rs);

/// The canonical reduced word (1-based letters): repeatedly peel the
/// smallest right descent. Deterministic, so safe to serialize.
std::vector<int> reduced_word(const WeylElement& w);

/// Unique element of maximal length, found by greedily appending ascents.
WeylElement longest_element(const RootSystem& rs);

/// |W| by the classical product formulas; the generation tests check the
/// breadth-first closure against this.
uint64_t weyl_order(CartanType ct);

/// Every element of W via breadth-first word closure. Throws ResourceError
/// if the group is larger than max_size.
std::vector<WeylElement> generate_group(const RootSystem& rs, size_t max_size = 3'000'000);

}  // namespace schubert
