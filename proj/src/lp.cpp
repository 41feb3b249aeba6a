// SPDX-License-Identifier: Apache-2.0
#include "bistoch/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bistoch {

namespace {

constexpr double kEnterEps = 1e-11;
constexpr double kPivotEps = 1e-11;

void validate_problem(const FeasibilityProblem& p) {
  if (p.num_vars < 0 || p.num_eq < 0) throw InputError("solve_feasibility: negative dimensions");
  if (p.E.size() != static_cast<std::size_t>(p.num_eq) * p.num_vars)
    throw InputError("solve_feasibility: E size does not match num_eq x num_vars");
  if (p.b.size() != static_cast<std::size_t>(p.num_eq))
    throw InputError("solve_feasibility: b size does not match num_eq");
  for (double v : p.E)
    if (!std::isfinite(v)) throw InputError("solve_feasibility: E has non-finite entries");
  for (double v : p.b)
    if (!std::isfinite(v)) throw InputError("solve_feasibility: b has non-finite entries");
}

double fresh_residual(const FeasibilityProblem& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (int r = 0; r < p.num_eq; ++r) {
    double acc = 0.0;
    for (int c = 0; c < p.num_vars; ++c) acc += p.e(r, c) * x[c];
    worst = std::max(worst, std::abs(acc - p.b[r]));
  }
  return worst;
}

}  // namespace

FeasibilityResult solve_feasibility(const FeasibilityProblem& p, double tol) {
  if (tol <= 0.0) throw InputError("solve_feasibility: tol must be positive");
  validate_problem(p);

  const int m = p.num_eq;
  const int nv = p.num_vars;
  FeasibilityResult res;
  if (m == 0) {
    res.status = LpStatus::Feasible;
    res.x.assign(nv, 0.0);
    return res;
  }

  // Columns: the real variables, then one artificial per row.
  const int ncols = nv + m;
  const int width = ncols + 1;  // +rhs
  std::vector<double> tab(static_cast<std::size_t>(m) * width, 0.0);
  auto t = [&](int r, int c) -> double& { return tab[static_cast<std::size_t>(r) * width + c]; };

  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) {
    const double sgn = (p.b[r] < 0.0) ? -1.0 : 1.0;
    for (int c = 0; c < nv; ++c) t(r, c) = sgn * p.e(r, c);
    t(r, nv + r) = 1.0;
    t(r, ncols) = sgn * p.b[r];
    basis[r] = nv + r;
  }

  // Reduced costs for minimizing the artificial sum; the artificial columns
  // price out to zero at the start.
  std::vector<double> dj(ncols, 0.0);
  for (int c = 0; c < nv; ++c) {
    double s = 0.0;
    for (int r = 0; r < m; ++r) s += t(r, c);
    dj[c] = -s;
  }

  // Artificials never re-enter once they leave the basis.
  std::vector<char> dead(ncols, 0);

  const long cap = 50L * (nv + m);
  for (long iter = 0;; ++iter) {
    if (iter > cap) throw CapError("solve_feasibility: simplex iteration cap exceeded");

    int enter = -1;  // Bland: smallest eligible index
    for (int c = 0; c < ncols; ++c) {
      if (!dead[c] && dj[c] < -kEnterEps) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      const double a = t(r, enter);
      if (a > kPivotEps) {
        const double ratio = t(r, ncols) / a;
        if (ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && (leave < 0 || basis[r] < basis[leave]))) {
          best = ratio;
          leave = r;
        }
      }
    }
    if (leave < 0)
      throw CapError("solve_feasibility: no pivot row found (phase-I cannot be unbounded)");

    const double piv = t(leave, enter);
    for (int c = 0; c <= ncols; ++c) t(leave, c) /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == leave) continue;
      const double f = t(r, enter);
      if (f == 0.0) continue;
      for (int c = 0; c <= ncols; ++c) t(r, c) -= f * t(leave, c);
    }
    const double fd = dj[enter];
    if (fd != 0.0)
      for (int c = 0; c < ncols; ++c) dj[c] -= fd * t(leave, c);

    if (basis[leave] >= nv) dead[basis[leave]] = 1;
    basis[leave] = enter;
  }

  double objective = 0.0;
  for (int r = 0; r < m; ++r)
    if (basis[r] >= nv) objective += t(r, ncols);
  res.phase1_objective = objective;

  if (objective <= tol) {
    res.status = LpStatus::Feasible;
    res.x.assign(nv, 0.0);
    for (int r = 0; r < m; ++r)
      if (basis[r] < nv) res.x[basis[r]] = t(r, ncols);
    res.residual = fresh_residual(p, res.x);
  } else {
    res.status = LpStatus::Infeasible;
  }
  return res;
}

bool verify_solution(const FeasibilityProblem& p, const std::vector<double>& x, double tol) {
  if (x.size() != static_cast<std::size_t>(p.num_vars))
    throw InputError("verify_solution: x size does not match num_vars");
  validate_problem(p);
  for (double v : x)
    if (v < -tol) return false;
  return fresh_residual(p, x) <= tol;
}

}  // namespace bistoch
