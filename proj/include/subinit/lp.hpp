#pragma once

// Exact feasibility of { x >= 0 : A x = b } by the two-phase simplex method
// (phase one only) with Bland's anti-cycling rule.

#include <optional>
#include <vector>

#include "subinit/errors.hpp"
#include "subinit/linalg.hpp"

namespace subinit {

struct LpResult {
  bool feasible = false;
  std::vector<Rational> witness;  // x with A x = b, x >= 0 when feasible
};

inline LpResult lp_feasible(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side has the wrong length");
  const std::size_t m = a.rows(), n = a.cols();
  // Tableau over [x | artificials | rhs]; rows negated so that rhs >= 0.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, 0));
  for (std::size_t i = 0; i < m; ++i) {
    int s = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a(i, j);
    t[i][n + i] = 1;
    t[i][width - 1] = s * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-one objective (minimize the artificial sum).
  auto reduced_cost = [&](std::size_t j) {
    Rational c = j >= n && j < n + m ? 1 : 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n) c -= t[i][j];
    return c;
  };

  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < n + m && !enter; ++j)  // Bland: lowest index
      if (reduced_cost(j) < 0) enter = j;
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][*enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][*enter];
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded direction; cannot happen for phase one
    std::size_t r = *leave;
    Rational piv = t[r][*enter];
    for (auto& v : t[r]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][*enter] == 0) continue;
      Rational f = t[i][*enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = *enter;
  }

  LpResult res;
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) infeasibility += t[i][width - 1];
  res.feasible = infeasibility == 0;
  if (res.feasible) {
    res.witness.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) res.witness[basis[i]] = t[i][width - 1];
  }
  return res;
}

/// Is x a convex combination of the given points? Witness = the weights.
inline LpResult in_convex_hull(const std::vector<std::vector<Rational>>& points, const std::vector<Rational>& x) {
  if (points.empty()) return {};
  std::size_t d = x.size();
  RationalMatrix a(d + 1, points.size());
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != d) throw DimensionError("point dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) a(i, j) = points[j][i];
    a(d, j) = 1;
  }
  for (std::size_t i = 0; i < d; ++i) b[i] = x[i];
  b[d] = 1;
  return lp_feasible(a, b);
}

}  // namespace subinit
