#pragma once

#include <cstdint>
#include <vector>

#include "schubert/coords.hpp"

namespace schubert::kernels {

/// Root coordinates packed column-major (structure of arrays): lane j holds
/// coordinate j of every root, padded with zeros to a multiple of 8 so the
/// vector backends can run full-width. A zero pad lane has height 0 and is
/// never counted as negative.
struct PackedRoots {
  int rank = 0;
  int count = 0;
  int stride = 0;                // count rounded up to a multiple of 8
  std::vector<int32_t> lanes;    // lanes[j * stride + i] = coord j of root i

  const int32_t* lane(int j) const { return lanes.data() + static_cast<size_t>(j) * stride; }
};

PackedRoots pack_roots(int rank, const std::vector<CoordArray>& roots);

// The sweep-critical inner loop: given a rank x rank integer action matrix
// (row-major) that permutes the root set, count how many packed roots have
// an image with negative coordinate sum. For a root image all coordinates
// share one sign, so a negative sum is exactly "the image is a negative
// root" and the count over the positive roots is the Coxeter length.
//
// Both backends compute the same function on arbitrary int32 inputs as long
// as no intermediate sum overflows (|a| and coords stay far below 2^20 in
// this codebase), so equivalence can be tested on random matrices too.
int count_negative_images_scalar(const int32_t* action, int rank, const PackedRoots& roots);

// image_heights_* fill out[0..count) with the coordinate sums of the images.
void image_heights_scalar(const int32_t* action, int rank, const PackedRoots& roots,
                          int32_t* out);

#if defined(__x86_64__) || defined(_M_X64)
int count_negative_images_avx2(const int32_t* action, int rank, const PackedRoots& roots);
void image_heights_avx2(const int32_t* action, int rank, const PackedRoots& roots, int32_t* out);
#endif

using CountFn = int (*)(const int32_t*, int, const PackedRoots&);

/// Backend picked once at startup: AVX2 when the CPU has it, scalar
/// otherwise. SCHUBERT_KERNEL=scalar|avx2 in the environment overrides.
CountFn active_count_kernel();
const char* active_kernel_name();

inline int count_negative_images(const int32_t* action, int rank, const PackedRoots& roots) {
  return active_count_kernel()(action, rank, roots);
}

}  // namespace schubert::kernels
