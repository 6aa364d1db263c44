#include "schubert/curves.hpp"

#include <algorithm>

#include "schubert/errors.hpp"

namespace schubert {

bool CurveSet::contains(const Root& r) const {
  return std::find(roots.begin(), roots.end(), r) != roots.end();
}

CurveSet curve_roots(const RootSystem& rs, BruhatContext& ctx, const WeylElement& w) {
  if (w.rs != &rs || &ctx.root_system() != &rs)
    throw std::invalid_argument("curve_roots: mismatched root system");
  CurveSet cs;
  cs.w = w;
  const auto& refl = ctx.reflections();
  for (size_t b = 0; b < rs.positive.size(); ++b) {
    if (ctx.leq(refl[b], w)) cs.roots.push_back(rs.positive[b].negated());
  }
  SCHUBERT_CHECK(int(cs.roots.size()) >= w.len, "Deodhar inequality |E(w)| >= l(w) violated");
  return cs;
}

namespace {

// Phase-1 simplex over exact rationals, Bland's rule. Decides
//   exists lambda >= 0 with  sum lambda_i g_i = p,  sum lambda_i = 1
// by minimizing the sum of artificial variables in
//   [G; 1] lambda + I a = [p; 1]   (rows pre-negated so the rhs is >= 0).
class ConvexFeasibility {
 public:
  ConvexFeasibility(const Root& point, const std::vector<Root>& gens) {
    rows_ = point.rank + 1;
    m_ = int(gens.size());
    cols_ = m_ + rows_ + 1;  // lambdas, artificials, rhs
    t_.assign(rows_, std::vector<Rat>(cols_, Rat(0)));
    for (int r = 0; r < rows_; ++r) {
      Rat b = r < point.rank ? Rat(point.c[r]) : Rat(1);
      bool flip = b < 0;
      for (int j = 0; j < m_; ++j) {
        Rat a = r < point.rank ? Rat(gens[j].c[r]) : Rat(1);
        t_[r][j] = flip ? -a : a;
      }
      t_[r][m_ + r] = 1;
      t_[r][cols_ - 1] = flip ? -b : b;
    }
    basis_.resize(rows_);
    for (int r = 0; r < rows_; ++r) basis_[r] = m_ + r;
    // canonical objective row for the artificial basis
    z_.assign(cols_, Rat(0));
    for (int j = 0; j < cols_; ++j) {
      Rat colsum(0);
      for (int r = 0; r < rows_; ++r) colsum += t_[r][j];
      Rat cost = (j >= m_ && j < m_ + rows_) ? Rat(1) : Rat(0);
      z_[j] = cost - colsum;
    }
  }

  bool feasible(std::vector<Rat>* multipliers) {
    for (;;) {
      int pcol = -1;
      for (int j = 0; j < cols_ - 1; ++j) {
        if (z_[j] < 0) { pcol = j; break; }  // Bland: smallest improving index
      }
      if (pcol < 0) break;
      int prow = -1;
      Rat best;
      for (int r = 0; r < rows_; ++r) {
        if (t_[r][pcol] <= 0) continue;
        Rat ratio = t_[r][cols_ - 1] / t_[r][pcol];
        if (prow < 0 || ratio < best || (ratio == best && basis_[r] < basis_[prow])) {
          prow = r;
          best = ratio;
        }
      }
      SCHUBERT_CHECK(prow >= 0, "phase-1 simplex cannot be unbounded");
      pivot(prow, pcol);
    }
    // objective value = -z_[rhs]; zero iff all artificials were driven out
    if (z_[cols_ - 1] != 0) return false;
    if (multipliers != nullptr) {
      multipliers->assign(m_, Rat(0));
      for (int r = 0; r < rows_; ++r)
        if (basis_[r] < m_) (*multipliers)[basis_[r]] = t_[r][cols_ - 1];
    }
    return true;
  }

 private:
  void pivot(int prow, int pcol) {
    Rat inv = 1 / t_[prow][pcol];
    for (int j = 0; j < cols_; ++j) t_[prow][j] *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == prow || t_[r][pcol] == 0) continue;
      Rat f = t_[r][pcol];
      for (int j = 0; j < cols_; ++j) t_[r][j] -= f * t_[prow][j];
    }
    if (z_[pcol] != 0) {
      Rat f = z_[pcol];
      for (int j = 0; j < cols_; ++j) z_[j] -= f * t_[prow][j];
    }
    basis_[prow] = pcol;
  }

  int rows_ = 0, m_ = 0, cols_ = 0;
  std::vector<std::vector<Rat>> t_;
  std::vector<Rat> z_;
  std::vector<int> basis_;
};

}  // namespace

bool in_convex_hull(const Root& point, const std::vector<Root>& generators,
                    std::vector<Rat>* multipliers) {
  if (generators.empty()) return false;
  for (const Root& g : generators)
    if (g.rank != point.rank) throw std::invalid_argument("hull query: rank mismatch");
  ConvexFeasibility lp(point, generators);
  bool ok = lp.feasible(multipliers);
  if (ok && multipliers != nullptr) {
    // exact re-verification of the certificate
    Rat total(0);
    for (const Rat& l : *multipliers) {
      SCHUBERT_CHECK(l >= 0, "hull certificate has a negative multiplier");
      total += l;
    }
    SCHUBERT_CHECK(total == 1, "hull certificate multipliers do not sum to 1");
    for (int k = 0; k < point.rank; ++k) {
      Rat s(0);
      for (size_t j = 0; j < generators.size(); ++j)
        s += (*multipliers)[j] * generators[j].c[k];
      SCHUBERT_CHECK(s == point.c[k], "hull certificate does not reproduce the point");
    }
  }
  return ok;
}

HullReport hull_report(const RootSystem& rs, const CurveSet& cs) {
  HullReport rep;
  for (const Root& gamma : rs.all) {
    if (!in_convex_hull(gamma, cs.roots)) continue;
    SCHUBERT_CHECK(sign_of(gamma) == Sign::Negative,
                   "positive root inside the hull of negative roots");
    rep.members.push_back(gamma);
    if (!cs.contains(gamma)) rep.violations.push_back(gamma);
  }
  return rep;
}

bool hull_closed(const RootSystem& rs, const CurveSet& cs) {
  return hull_report(rs, cs).violations.empty();
}

}  // namespace schubert
