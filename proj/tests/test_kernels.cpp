#include <doctest.h>

#include <cstring>
#include <random>
#include <string>

#include "schubert/kernels.hpp"
#include "schubert/weyl.hpp"

using namespace schubert;
using namespace schubert::kernels;

namespace {

// row-major action matrix of a Weyl element, as the kernels consume it
std::vector<int32_t> row_major(const WeylElement& w) {
  int n = w.rs->rank();
  std::vector<int32_t> a(size_t(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r * n + c] = w.mat.at(r, c);
  return a;
}

}  // namespace

TEST_CASE("pack_roots pads each lane to a multiple of eight") {
  std::vector<CoordArray> roots;
  for (int i = 0; i < 5; ++i) {
    CoordArray c{};
    c[0] = int8_t(i + 1);
    c[1] = int8_t(-i);
    roots.push_back(c);
  }
  PackedRoots p = pack_roots(2, roots);
  CHECK(p.rank == 2);
  CHECK(p.count == 5);
  CHECK(p.stride == 8);
  CHECK(p.lanes.size() == 16);
  CHECK(p.lane(0)[0] == 1);
  CHECK(p.lane(0)[4] == 5);
  CHECK(p.lane(0)[5] == 0);  // pad
  CHECK(p.lane(1)[2] == -2);
  CHECK(p.lane(1)[7] == 0);
}

TEST_CASE("scalar kernel against a hand-computed example") {
  // identity action: nothing negated
  std::vector<CoordArray> roots;
  CoordArray a{}, b{}, c{};
  a[0] = 1;                // alpha_1
  b[1] = 1;                // alpha_2
  c[0] = 1; c[1] = 1;      // alpha_1 + alpha_2
  roots = {a, b, c};
  PackedRoots p = pack_roots(2, roots);

  int32_t ident[4] = {1, 0, 0, 1};
  CHECK(count_negative_images_scalar(ident, 2, p) == 0);

  // s_1 in A2: alpha_1 -> -alpha_1, alpha_2 -> alpha_1 + alpha_2
  // columns are images, so row-major is [-1 1 / 0 1]
  int32_t s1[4] = {-1, 1, 0, 1};
  CHECK(count_negative_images_scalar(s1, 2, p) == 1);

  int32_t heights[8];
  image_heights_scalar(s1, 2, p, heights);
  CHECK(heights[0] == -1);  // s1(a1) = -a1
  CHECK(heights[1] == 2);   // s1(a2) = a1 + a2
  CHECK(heights[2] == 1);   // s1(a1 + a2) = a2
}

TEST_CASE("kernel count equals Coxeter length on whole groups") {
  for (const char* name : {"A3", "B3", "G2"}) {
    RootSystem rs = build_root_system(CartanType::make(name[0], name[1] - '0'));
    CAPTURE(name);
    for (const WeylElement& w : generate_group(rs)) {
      auto a = row_major(w);
      CHECK(count_negative_images_scalar(a.data(), rs.rank(), rs.packed_positive) ==
            w.length());
    }
  }
}

TEST_CASE("active kernel dispatch") {
  const std::string name = active_kernel_name();
  CHECK((name == "scalar" || name == "avx2"));
  CHECK(active_count_kernel() != nullptr);
}

#if defined(__x86_64__) || defined(_M_X64)

TEST_CASE("avx2 and scalar agree on real Weyl actions") {
  if (!__builtin_cpu_supports("avx2")) return;
  for (const char* name : {"B3", "F4", "E6"}) {
    RootSystem rs = build_root_system(CartanType::make(name[0], name[1] - '0'));
    CAPTURE(name);
    WeylElement w0 = longest_element(rs);
    std::vector<WeylElement> sample = {identity(rs), w0};
    for (int i = 0; i < rs.rank(); ++i) sample.push_back(mul_simple_right(w0, i));
    for (const WeylElement& w : sample) {
      auto a = row_major(w);
      int ns = count_negative_images_scalar(a.data(), rs.rank(), rs.packed_positive);
      int nv = count_negative_images_avx2(a.data(), rs.rank(), rs.packed_positive);
      CHECK(ns == nv);

      std::vector<int32_t> hs(rs.packed_positive.stride), hv(rs.packed_positive.stride);
      image_heights_scalar(a.data(), rs.rank(), rs.packed_positive, hs.data());
      image_heights_avx2(a.data(), rs.rank(), rs.packed_positive, hv.data());
      CHECK(std::memcmp(hs.data(), hv.data(),
                        size_t(rs.packed_positive.count) * 4) == 0);
    }
  }
}

TEST_CASE("avx2 and scalar agree on random integer inputs") {
  if (!__builtin_cpu_supports("avx2")) return;
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> rank_d(1, 8), coord_d(-40, 40), count_d(1, 40);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rank_d(rng);
    int count = count_d(rng);
    std::vector<CoordArray> roots(count);
    for (auto& r : roots)
      for (int j = 0; j < n; ++j) r[j] = int8_t(coord_d(rng) / 8);
    PackedRoots p = pack_roots(n, roots);
    std::vector<int32_t> a(size_t(n) * n);
    for (auto& x : a) x = coord_d(rng);

    CAPTURE(trial);
    CHECK(count_negative_images_scalar(a.data(), n, p) ==
          count_negative_images_avx2(a.data(), n, p));

    std::vector<int32_t> hs(p.stride), hv(p.stride);
    image_heights_scalar(a.data(), n, p, hs.data());
    image_heights_avx2(a.data(), n, p, hv.data());
    CHECK(std::memcmp(hs.data(), hv.data(), size_t(p.count) * 4) == 0);
  }
}

#endif  // x86-64
