#include "schubert/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void check_same_system(const WeylElement& a, const WeylElement& b) {
  if (a.rs != b.rs) throw std::invalid_argument("elements from different root systems");
}

ActionMatrix identity_matrix(int rank) {
  ActionMatrix m;
  for (int i = 0; i < rank; ++i) m.set(i, i, 1);
  return m;
}

ActionMatrix mat_mul(int rank, const ActionMatrix& a, const ActionMatrix& b) {
  ActionMatrix c;
  for (int j = 0; j < rank; ++j) {
    for (int r = 0; r < rank; ++r) {
      int acc = 0;
      for (int k = 0; k < rank; ++k) acc += a.at(r, k) * b.at(k, j);
      SCHUBERT_CHECK(acc >= -6 && acc <= 6, "action matrix entry is not a root coordinate");
      c.set(r, j, acc);
    }
  }
  return c;
}

int inversion_count(const RootSystem& rs, const ActionMatrix& m) {
  int32_t rowmajor[kMaxRank * kMaxRank];
  const int n = rs.rank();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rowmajor[r * n + c] = m.at(r, c);
  int len = kernels::count_negative_images(rowmajor, n, rs.packed_positive);
#ifndef NDEBUG
  // cross-check the kernel against strict sign classification
  int strict = 0;
  for (const Root& beta : rs.positive) {
    Root img;
    img.rank = int8_t(n);
    for (int r = 0; r < n; ++r) {
      int acc = 0;
      for (int j = 0; j < n; ++j) acc += m.at(r, j) * beta.c[j];
      img.c[r] = int8_t(acc);
    }
    if (sign_of(img) == Sign::Negative) ++strict;
  }
  assert(strict == len);
#endif
  return len;
}

ActionMatrix simple_matrix(const RootSystem& rs, int i) {
  // columns: s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i
  const int n = rs.rank();
  ActionMatrix m = identity_matrix(n);
  for (int j = 0; j < n; ++j) m.set(i, j, (j == i ? 1 : 0) - rs.cartan[i][j]);
  return m;
}

bool column_is_negative(int rank, const ActionMatrix& m, int col) {
  // a column is a root: all entries share one sign
  for (int r = 0; r < rank; ++r) {
    if (m.at(r, col) < 0) return true;
    if (m.at(r, col) > 0) return false;
  }
  SCHUBERT_CHECK(false, "zero column in an action matrix");
  return false;
}

}  // namespace

Root WeylElement::apply(const Root& v) const {
  const int n = rs->rank();
  Root out;
  out.rank = int8_t(n);
  for (int r = 0; r < n; ++r) {
    int acc = 0;
    for (int j = 0; j < n; ++j) acc += mat.at(r, j) * v.c[j];
    SCHUBERT_CHECK(acc >= -6 && acc <= 6, "image coordinate out of root range");
    out.c[r] = int8_t(acc);
  }
  return out;
}

Root WeylElement::apply_inverse(const Root& v) const {
  WeylElement w = *this;
  std::swap(w.mat, w.inv);
  return w.apply(v);
}

bool WeylElement::right_descent(int i) const { return column_is_negative(rs->rank(), mat, i); }
bool WeylElement::left_descent(int i) const { return column_is_negative(rs->rank(), inv, i); }

size_t WeylHash::operator()(const WeylElement& w) const {
  // FNV-1a over the matrix bytes
  size_t h = 1469598103934665603ull;
  for (int8_t b : w.mat.m) {
    h ^= size_t(uint8_t(b));
    h *= 1099511628211ull;
  }
  return h;
}

WeylElement identity(const RootSystem& rs) {
  WeylElement w;
  w.rs = &rs;
  w.mat = w.inv = identity_matrix(rs.rank());
  w.len = 0;
  return w;
}

WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElement w = identity(rs);
  for (int letter : word) {
    if (letter < 1 || letter > rs.rank())
      throw std::invalid_argument("word letter " + std::to_string(letter) + " out of 1.." +
                                  std::to_string(rs.rank()));
    w = mul_simple_right(w, letter - 1);
  }
  return w;
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  return from_word(rs, std::span<const int>(word));
}

WeylElement multiply(const WeylElement& x, const WeylElement& y) {
  check_same_system(x, y);
  const int n = x.rs->rank();
  WeylElement w;
  w.rs = x.rs;
  w.mat = mat_mul(n, x.mat, y.mat);
  w.inv = mat_mul(n, y.inv, x.inv);
  w.len = inversion_count(*x.rs, w.mat);
  return w;
}

WeylElement inverse(const WeylElement& x) {
  WeylElement w = x;
  std::swap(w.mat, w.inv);
  return w;  // l(w) = l(w^{-1})
}

WeylElement mul_simple_right(const WeylElement& x, int i) {
  const int n = x.rs->rank();
  int delta = x.right_descent(i) ? -1 : +1;
  WeylElement w;
  w.rs = x.rs;
  ActionMatrix s = simple_matrix(*x.rs, i);
  w.mat = mat_mul(n, x.mat, s);
  w.inv = mat_mul(n, s, x.inv);
  w.len = x.len + delta;
  assert(w.len == inversion_count(*x.rs, w.mat));
  return w;
}

WeylElement mul_simple_left(int i, const WeylElement& x) {
  const int n = x.rs->rank();
  int delta = x.left_descent(i) ? -1 : +1;
  WeylElement w;
  w.rs = x.rs;
  ActionMatrix s = simple_matrix(*x.rs, i);
  w.mat = mat_mul(n, s, x.mat);
  w.inv = mat_mul(n, x.inv, s);
  w.len = x.len + delta;
  assert(w.len == inversion_count(*x.rs, w.mat));
  return w;
}

WeylElement reflection_element(const RootSystem& rs, const Root& beta) {
  if (!rs.is_root(beta)) throw std::invalid_argument("reflection_element: not a root");
  if (sign_of(beta) != Sign::Positive)
    throw std::invalid_argument("reflection_element expects a positive root");
  const int n = rs.rank();
  WeylElement w;
  w.rs = &rs;
  for (int j = 0; j < n; ++j) {
    int64_t p = pairing_int(rs, Root::simple(n, j), beta);
    for (int r = 0; r < n; ++r) {
      int64_t v = (r == j ? 1 : 0) - p * beta.c[r];
      SCHUBERT_CHECK(v >= -6 && v <= 6, "reflection matrix entry out of range");
      w.mat.set(r, j, int(v));
    }
  }
  w.inv = w.mat;  // involution
  w.len = inversion_count(rs, w.mat);
  SCHUBERT_CHECK(w.len % 2 == 1, "reflection must have odd length");
  return w;
}

std::vector<WeylElement> all_reflections(const RootSystem& rs) {
  std::vector<WeylElement> out;
  out.reserve(rs.positive.size());
  for (const Root& beta : rs.positive) out.push_back(reflection_element(rs, beta));
  return out;
}

std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  while (cur.len > 0) {
    int i = 0;
    while (!cur.right_descent(i)) ++i;  // smallest i with w(alpha_i) negative
    word.push_back(i + 1);
    cur = mul_simple_right(cur, i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = identity(rs);
  for (;;) {
    int i = 0;
    const int n = rs.rank();
    while (i < n && w.right_descent(i)) ++i;
    if (i == n) break;  // all simple images negative: this is w0
    w = mul_simple_right(w, i);
  }
  SCHUBERT_CHECK(size_t(w.len) == rs.num_positive(), "longest element length != |Phi+|");
  return w;
}

uint64_t weyl_order(CartanType ct) {
  auto fact = [](int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= uint64_t(i);
    return f;
  };
  const int n = ct.rank;
  switch (ct.letter) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (uint64_t(1) << n) * fact(n);
    case 'D': return (uint64_t(1) << (n - 1)) * fact(n);
    case 'G': return 12;
    case 'F': return 1152;
    case 'E':
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    default: throw std::invalid_argument("unknown letter");
  }
}

std::vector<WeylElement> generate_group(const RootSystem& rs, size_t max_size) {
  std::vector<WeylElement> out;
  std::unordered_set<WeylElement, WeylHash> seen;
  out.push_back(identity(rs));
  seen.insert(out.front());
  for (size_t head = 0; head < out.size(); ++head) {
    WeylElement cur = out[head];  // copy: out may reallocate
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElement next = mul_simple_right(cur, i);
      if (seen.insert(next).second) {
        if (out.size() >= max_size)
          throw ResourceError("Weyl group generation exceeds budget of " +
                              std::to_string(max_size) + " elements");
        out.push_back(next);
      }
    }
  }
  return out;
}

}  // namespace schubert
