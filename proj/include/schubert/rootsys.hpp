#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/coords.hpp"
#include "schubert/kernels.hpp"
#include "schubert/rational.hpp"

namespace schubert {

/// One of the simple Cartan types A..G with its rank.
/// Admissible pairs: A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7,8},
/// F n=4, G n=2. Bourbaki node numbering throughout.
struct CartanType {
  char letter = 'A';
  int rank = 0;

  static bool admissible(char letter, int rank);
  /// Throws std::invalid_argument on an inadmissible pair.
  static CartanType make(char letter, int rank);

  std::string name() const;  // "B2", "E7", ...
  bool operator==(const CartanType&) const = default;
};

/// A root written in the simple-root basis. Genuine roots have all
/// coordinates >= 0 (positive) or all <= 0 (negative), never mixed.
struct Root {
  CoordArray c{};
  int8_t rank = 0;

  static Root simple(int rank, int i);  // alpha_i, 0-based
  static Root from_coords(const std::vector<int>& coords);

  int coord(int i) const { return c[static_cast<size_t>(i)]; }
  int height() const { return coord_height(c, rank); }
  Root negated() const;
  std::vector<int> coords() const;

  bool operator==(const Root& o) const { return rank == o.rank && c == o.c; }
  /// height-then-lexicographic; the pinned deterministic root order
  bool operator<(const Root& o) const;
};

enum class Sign { Positive, Negative };

/// Classifies a root. Throws std::invalid_argument on a mixed-sign or zero
/// vector, which cannot be a root.
Sign sign_of(const Root& r);

/// Full root system of a simple type, generated by closing the simple roots
/// under the simple reflections. Immutable after construction and safe to
/// share across threads.
struct RootSystem {
  CartanType type;
  /// cartan[i][j] = <alpha_j, alpha_i^vee>; rows index coroots.
  std::array<std::array<int8_t, kMaxRank>, kMaxRank> cartan{};
  /// Smallest positive integers with sym[i]*cartan[i][j] symmetric;
  /// (alpha_i, alpha_i) = 2*sym[i] fixes the invariant bilinear form.
  std::array<int64_t, kMaxRank> sym{};
  std::vector<Root> positive;  // sorted by height then lex
  std::vector<Root> all;       // positive, then the matching negatives
  kernels::PackedRoots packed_positive;

  int rank() const { return type.rank; }
  size_t num_positive() const { return positive.size(); }

  /// Index into `all`, or -1 when the vector is not a root here.
  int index_of(const Root& r) const;
  /// Index into `positive`, or -1.
  int positive_index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r) >= 0; }
};

RootSystem build_root_system(CartanType ct);

/// Coroot pairing <v, beta^vee> = 2(v,beta)/(beta,beta), exact.
/// Integral whenever v is a root; beta must be a root of rs.
Rat pairing(const RootSystem& rs, const Root& v, const Root& beta);

/// Same pairing, checked integral and narrowed.
int64_t pairing_int(const RootSystem& rs, const Root& v, const Root& beta);

/// s_beta(v) = v - <v, beta^vee> beta. Involutive; the result is a root.
Root reflect_root(const RootSystem& rs, const Root& v, const Root& beta);

}  // namespace schubert
