#include "schubert/criterion.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Smooth: return "SMOOTH";
    case Status::Singular: return "SINGULAR";
    case Status::CriterionInapplicable: return "CRITERION_INAPPLICABLE";
    case Status::ConditionsOnly: return "CONDITIONS_ONLY";
  }
  return "?";
}

Verdict is_smooth(const RootSystem& rs, BruhatContext& ctx, const WeylElement& w,
                  const EvalOptions& opts) {
  if (w.rs != &rs) throw std::invalid_argument("is_smooth: element from a different system");
  Verdict v;
  v.word = reduced_word(w);
  v.length = w.len;

  const bool g2 = rs.type.letter == 'G';
  if (g2 && !opts.allow_g2) {
    v.status = Status::CriterionInapplicable;
    return v;
  }

  v.poincare = ctx.poincare_polynomial(w, opts.interval_budget);
  v.palindromic = is_palindromic(v.poincare);

  if (!(opts.short_circuit && !*v.palindromic)) {
    CurveSet cs = curve_roots(rs, ctx, w);
    HullReport rep = hull_report(rs, cs);
    v.curve_roots = std::move(cs.roots);
    v.hull_violations = rep.violations;
    v.hull_closed = rep.violations.empty();
  }

  if (g2) {
    v.status = Status::ConditionsOnly;  // condition values only, no claim
  } else if (*v.palindromic && v.hull_closed.value_or(false)) {
    v.status = Status::Smooth;
  } else {
    v.status = Status::Singular;
  }
  return v;
}

Permutation Permutation::identity_perm(int n) {
  Permutation p;
  p.one_line.resize(n);
  for (int i = 0; i < n; ++i) p.one_line[i] = i + 1;
  return p;
}

Permutation Permutation::from_one_line(std::vector<int> v) {
  if (v.empty()) throw std::invalid_argument("empty one-line permutation");
  std::vector<bool> hit(v.size(), false);
  for (int x : v) {
    if (x < 1 || x > int(v.size()) || hit[x - 1])
      throw std::invalid_argument("not a permutation of 1..n");
    hit[x - 1] = true;
  }
  Permutation p;
  p.one_line = std::move(v);
  return p;
}

int Permutation::inversions() const {
  int n = size(), inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inv += one_line[i] > one_line[j];
  return inv;
}

Permutation weyl_to_permutation(const RootSystem& rs, const WeylElement& w) {
  if (rs.type.letter != 'A')
    throw std::invalid_argument("permutation form exists only in type A");
  const int n = rs.rank() + 1;
  Permutation p = Permutation::identity_perm(n);
  // left-to-right letters act as position swaps; final entry j is w(j)
  for (int letter : reduced_word(w)) std::swap(p.one_line[letter - 1], p.one_line[letter]);
  SCHUBERT_CHECK(p.inversions() == w.len, "permutation inversions disagree with l(w)");
  return p;
}

WeylElement permutation_to_weyl(const RootSystem& rs, const Permutation& p) {
  if (rs.type.letter != 'A')
    throw std::invalid_argument("permutation form exists only in type A");
  if (p.size() != rs.rank() + 1)
    throw std::invalid_argument("permutation size must be rank+1");
  std::vector<int> v = p.one_line;
  std::vector<int> word;
  // adjacent-swap sort; the recorded swaps, reversed, form a reduced word
  for (;;) {
    int i = 0;
    while (i + 1 < int(v.size()) && v[i] < v[i + 1]) ++i;
    if (i + 1 >= int(v.size())) break;
    std::swap(v[i], v[i + 1]);
    word.push_back(i + 1);
  }
  std::reverse(word.begin(), word.end());
  WeylElement w = from_word(rs, word);
  SCHUBERT_CHECK(weyl_to_permutation(rs, w) == p, "permutation round-trip failed");
  return w;
}

namespace {
// exhaustive search over increasing index tuples, pruning as soon as the
// chosen prefix stops being order-isomorphic to the pattern prefix
bool pattern_search(const std::vector<int>& p, const std::vector<int>& q,
                    std::vector<int>& chosen, int start) {
  const int n = int(p.size()), k = int(q.size());
  const int depth = int(chosen.size());
  if (depth == k) return true;
  for (int pos = start; pos <= n - (k - depth); ++pos) {
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j) {
      bool pat_less = q[j] < q[depth];
      bool val_less = p[chosen[j]] < p[pos];
      if (pat_less != val_less) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(pos);
    if (pattern_search(p, q, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}
}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& q) {
  if (q.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(q.size());
  return pattern_search(p.one_line, q.one_line, chosen, 0);
}

bool smooth_by_pattern(const Permutation& p) {
  static const Permutation p3412 = Permutation::from_one_line({3, 4, 1, 2});
  static const Permutation p4231 = Permutation::from_one_line({4, 2, 3, 1});
  return !contains_pattern(p, p3412) && !contains_pattern(p, p4231);
}

}  // namespace schubert
