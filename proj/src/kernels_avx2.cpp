// AVX2 variants of the root-action kernels. Compiled with -mavx2 in its own
// translation unit; callers reach it only through the runtime dispatch in
// kernels.cpp, so the rest of the library stays baseline-ISA.

#include "schubert/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace schubert::kernels {

namespace {

// The image height only depends on the column sums of the action:
//   sum_k (A r)_k = sum_j (sum_k A[k][j]) r_j
// so the whole matrix collapses to one dot product per root.
inline void column_sums(const int32_t* action, int rank, int32_t* t) {
  for (int j = 0; j < rank; ++j) {
    int32_t s = 0;
    for (int k = 0; k < rank; ++k) s += action[k * rank + j];
    t[j] = s;
  }
}

}  // namespace

void image_heights_avx2(const int32_t* action, int rank, const PackedRoots& roots,
                        int32_t* out) {
  int32_t t[kMaxRank];
  column_sums(action, rank, t);
  int i = 0;
  for (; i + 8 <= roots.stride; i += 8) {
    __m256i h = _mm256_setzero_si256();
    for (int j = 0; j < rank; ++j) {
      __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(roots.lane(j) + i));
      h = _mm256_add_epi32(h, _mm256_mullo_epi32(c, _mm256_set1_epi32(t[j])));
    }
    int lanes = roots.count - i < 8 ? roots.count - i : 8;
    int32_t tmp[8];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(tmp), h);
    for (int l = 0; l < lanes; ++l) out[i + l] = tmp[l];
  }
}

int count_negative_images_avx2(const int32_t* action, int rank, const PackedRoots& roots) {
  int32_t t[kMaxRank];
  column_sums(action, rank, t);
  const __m256i zero = _mm256_setzero_si256();
  int n = 0;
  for (int i = 0; i + 8 <= roots.stride; i += 8) {
    __m256i h = _mm256_setzero_si256();
    for (int j = 0; j < rank; ++j) {
      __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(roots.lane(j) + i));
      h = _mm256_add_epi32(h, _mm256_mullo_epi32(c, _mm256_set1_epi32(t[j])));
    }
    // pad lanes have height 0 and never test negative
    __m256i neg = _mm256_cmpgt_epi32(zero, h);
    n += __builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(neg))));
  }
  return n;
}

}  // namespace schubert::kernels

#endif  // x86-64
