// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "bistoch/error.hpp"

namespace bistoch {

/// Find x >= 0 with E x = b. E is stored row-major, num_eq x num_vars.
struct FeasibilityProblem {
  int num_vars = 0;
  int num_eq = 0;
  std::vector<double> E;
  std::vector<double> b;

  double e(int row, int col) const { return E[static_cast<std::size_t>(row) * num_vars + col]; }
};

enum class LpStatus { Feasible, Infeasible };

struct FeasibilityResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;      // present iff feasible
  double residual = 0.0;      // max |Ex - b|, freshly computed, feasible only
  double phase1_objective = 0.0;
};

/// Phase-I dense-tableau simplex with Bland's anti-cycling rule. Feasible iff
/// the artificial-variable optimum is <= tol. Throws CapError when the
/// iteration cap 50*(num_vars+num_eq) is exceeded, which is reported
/// distinctly from infeasibility.
FeasibilityResult solve_feasibility(const FeasibilityProblem& p, double tol = 1e-9);

/// Fresh-arithmetic re-check of a candidate solution, independent of any
/// solver state: min(x) >= -tol and max |Ex - b| <= tol.
bool verify_solution(const FeasibilityProblem& p, const std::vector<double>& x, double tol);

}  // namespace bistoch
