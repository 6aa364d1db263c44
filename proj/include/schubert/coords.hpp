#pragma once

#include <array>
#include <cstdint>

namespace schubert {

/// Largest rank among the simple types (E8).
inline constexpr int kMaxRank = 8;

/// Fixed-capacity coordinate vector in the simple-root basis.
/// Entries beyond the ambient rank are zero. Root coordinates never exceed
/// 6 in absolute value (the largest coefficient of a highest root), so
/// int8 is wide enough for roots and for Weyl action matrix columns.
using CoordArray = std::array<int8_t, kMaxRank>;

inline int coord_height(const CoordArray& c, int rank) {
  int h = 0;
  for (int i = 0; i < rank; ++i) h += c[i];
  return h;
}

}  // namespace schubert
