#include "schubert/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace schubert::kernels {

PackedRoots pack_roots(int rank, const std::vector<CoordArray>& roots) {
  PackedRoots p;
  p.rank = rank;
  p.count = static_cast<int>(roots.size());
  p.stride = (p.count + 7) & ~7;
  p.lanes.assign(static_cast<size_t>(rank) * p.stride, 0);
  for (int j = 0; j < rank; ++j) {
    int32_t* lane = p.lanes.data() + static_cast<size_t>(j) * p.stride;
    for (int i = 0; i < p.count; ++i) lane[i] = roots[static_cast<size_t>(i)][j];
  }
  return p;
}

// Reference path: materialize every image coordinate, then sum.
void image_heights_scalar(const int32_t* action, int rank, const PackedRoots& roots,
                          int32_t* out) {
  for (int i = 0; i < roots.count; ++i) {
    int32_t h = 0;
    for (int k = 0; k < rank; ++k) {
      int32_t img_k = 0;
      for (int j = 0; j < rank; ++j) img_k += action[k * rank + j] * roots.lane(j)[i];
      h += img_k;
    }
    out[i] = h;
  }
}

int count_negative_images_scalar(const int32_t* action, int rank, const PackedRoots& roots) {
  int n = 0;
  for (int i = 0; i < roots.count; ++i) {
    int32_t h = 0;
    for (int k = 0; k < rank; ++k) {
      int32_t img_k = 0;
      for (int j = 0; j < rank; ++j) img_k += action[k * rank + j] * roots.lane(j)[i];
      h += img_k;
    }
    n += (h < 0);
  }
  return n;
}

namespace {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

CountFn resolve_count_kernel(const char** name) {
  const char* force = std::getenv("SCHUBERT_KERNEL");
  if (force != nullptr && std::strcmp(force, "scalar") == 0) {
    *name = "scalar";
    return &count_negative_images_scalar;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available() &&
      (force == nullptr || std::strcmp(force, "avx2") == 0)) {
    *name = "avx2";
    return &count_negative_images_avx2;
  }
#endif
  *name = "scalar";
  return &count_negative_images_scalar;
}

struct Dispatch {
  const char* name = nullptr;
  CountFn fn = nullptr;
  Dispatch() { fn = resolve_count_kernel(&name); }
};

const Dispatch& dispatch() {
  static const Dispatch d;
  return d;
}

}  // namespace

CountFn active_count_kernel() { return dispatch().fn; }
const char* active_kernel_name() { return dispatch().name; }

}  // namespace schubert::kernels
