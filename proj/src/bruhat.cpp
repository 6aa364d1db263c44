#include "schubert/bruhat.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_set>

#include "schubert/errors.hpp"

namespace schubert {

bool is_palindromic(const PoincarePolynomial& p) {
  const auto& c = p.coeffs;
  for (size_t k = 0, l = c.size(); k < l / 2; ++k)
    if (c[k] != c[l - 1 - k]) return false;
  return true;
}

BruhatContext::BruhatContext(const RootSystem& rs)
    : rs_(&rs), reflections_(all_reflections(rs)) {}

size_t BruhatContext::PairKeyHash::operator()(const PairKey& k) const {
  size_t h = 1469598103934665603ull;
  for (int8_t b : k.bytes) {
    h ^= size_t(uint8_t(b));
    h *= 1099511628211ull;
  }
  return h;
}

bool BruhatContext::leq(const WeylElement& x, const WeylElement& w) {
  if (x.rs != rs_ || w.rs != rs_)
    throw std::invalid_argument("bruhat_leq: elements from a different root system");
  if (x.len > w.len) return false;
  if (x.len == 0) return true;             // identity is the minimum
  if (x.len == w.len) return x == w;       // equal lengths compare only equal

  PairKey key;
  std::memcpy(key.bytes.data(), x.mat.m.data(), x.mat.m.size());
  std::memcpy(key.bytes.data() + x.mat.m.size(), w.mat.m.data(), w.mat.m.size());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  int s = 0;
  while (!w.left_descent(s)) ++s;  // smallest s with sw < w; exists since w != e
  bool result = x.left_descent(s) ? leq(mul_simple_left(s, x), mul_simple_left(s, w))
                                  : leq(x, mul_simple_left(s, w));
  memo_.emplace(key, result);
  return result;
}

BruhatInterval BruhatContext::lower_interval(const WeylElement& w, size_t budget) {
  if (w.rs != rs_) throw std::invalid_argument("lower_interval: wrong root system");
  std::unordered_set<WeylElement, WeylHash> seen;
  std::vector<WeylElement> layer{w}, next;
  seen.insert(w);
  // walk covers downward: the covers of x are exactly the x*s_beta one
  // length below, and every interval element sits on a chain of covers
  while (!layer.empty()) {
    next.clear();
    for (const WeylElement& x : layer) {
      if (x.len == 0) continue;
      for (const WeylElement& t : reflections_) {
        WeylElement y = multiply(x, t);
        if (y.len != x.len - 1) continue;
        if (seen.size() >= budget && !seen.count(y))
          throw ResourceError("Bruhat interval exceeds budget of " + std::to_string(budget) +
                              " elements");
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    layer.swap(next);
  }

  BruhatInterval out;
  out.top = w;
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end(),
            [](const WeylElement& a, const WeylElement& b) {
              if (a.len != b.len) return a.len < b.len;
              return a.mat.m < b.mat.m;
            });
  return out;
}

PoincarePolynomial BruhatContext::poincare_polynomial(const WeylElement& w, size_t budget) {
  BruhatInterval iv = lower_interval(w, budget);
  PoincarePolynomial p;
  p.coeffs.assign(size_t(w.len) + 1, 0);
  for (const WeylElement& x : iv.elements) p.coeffs[x.len] += 1;
  SCHUBERT_CHECK(p.coeffs.front() == 1 && p.coeffs.back() == 1,
                 "Poincare polynomial must start and end with 1");
  return p;
}

bool subword_leq_oracle(const WeylElement& x, const WeylElement& w, int max_length) {
  if (x.rs != w.rs) throw std::invalid_argument("subword oracle: mismatched root systems");
  if (w.len > max_length)
    throw OracleGuardError("subword oracle refuses l(w) = " + std::to_string(w.len) +
                           " > guard " + std::to_string(max_length));
  if (x.len > w.len) return false;
  const RootSystem& rs = *w.rs;
  const int n = rs.rank();
  std::vector<int> word = reduced_word(w);
  const int L = int(word.size());

  // plain exhaustive subsequence products, matrices only
  std::vector<ActionMatrix> simple(n);
  for (int i = 0; i < n; ++i) {
    WeylElement s = from_word(rs, std::vector<int>{i + 1});
    simple[i] = s.mat;
  }
  ActionMatrix id = identity(rs).mat;
  for (uint32_t mask = 0; mask < (uint32_t(1) << L); ++mask) {
    ActionMatrix prod = id;
    for (int pos = 0; pos < L; ++pos) {
      if (!(mask & (uint32_t(1) << pos))) continue;
      const ActionMatrix& s = simple[word[pos] - 1];
      ActionMatrix nxt;
      for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) {
          int acc = 0;
          for (int k = 0; k < n; ++k) acc += prod.at(r, k) * s.at(k, j);
          nxt.set(r, j, acc);
        }
      prod = nxt;
    }
    if (prod == x.mat) return true;
  }
  return false;
}

}  // namespace schubert
