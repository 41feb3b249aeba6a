// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bistoch/matrix.hpp"

namespace bistoch {

/// Real symmetric positive semidefinite matrix with unit diagonal, all
/// verified within 1e-9 at construction.
class RealCorrelationMatrix {
public:
  explicit RealCorrelationMatrix(RealMatrix m);

  int dim() const { return m_.dim(); }
  const RealMatrix& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

private:
  RealMatrix m_;
};

/// Probability weights over canonical sign vectors (first component '+').
/// A sign vector s induces the rank-one correlation matrix s s^T; the
/// distribution certifies membership in the rank-one hull.
struct CutDistribution {
  int n = 0;
  std::vector<std::pair<std::string, double>> weights;  // ("+--+", w), mask-ascending
};

/// Real-valued function on all 2^n subsets of {1..n}, stored in
/// binary-counter order (bit j set = element j+1 present).
struct BGPCertificate {
  int n = 0;
  std::vector<double> f;
};

/// In-place unnormalized Walsh-Hadamard transform over subset masks:
/// out[S] = sum_T (-1)^{|S and T|} in[T]. Applying it twice multiplies by 2^n.
void walsh_hadamard(std::vector<double>& v);

std::string canonical_sign_string(int n, unsigned mask);
int sign_at(const std::string& signs, int i);

/// Decide membership of C in the convex hull of real rank-one correlation
/// matrices by LP over the 2^{n-1} canonical sign vectors: weights w >= 0,
/// sum w = 1, sum_s w_s s_i s_j = c_ij. Infeasible means C is outside the
/// hull (the certificate equivalence is exact up to tol). Capped at n <= 12.
std::optional<CutDistribution> cut_membership(const RealCorrelationMatrix& c, double tol = 1e-9);

/// Pair moments sum_s w_s s_i s_j induced by a distribution (unit diagonal).
RealMatrix distribution_moments(const CutDistribution& p);

/// f(T) = sum_A p(A) (-1)^{|A and T|}, the mixture of subset characters.
BGPCertificate bgp_from_distribution(const CutDistribution& p);

/// Checks f(empty)=1, f({i,j})=c_ij, and Walsh nonnegativity, entirely by
/// fresh transforms, independent of any LP internals.
bool verify_bgp(const BGPCertificate& f, const RealCorrelationMatrix& c, double tol);

/// Detailed residuals behind verify_bgp, for reporting.
struct BgpCheck {
  double empty_set_error = 0.0;
  double pair_error = 0.0;
  double walsh_min = 0.0;
  bool ok = false;
};
BgpCheck check_bgp(const BGPCertificate& f, const RealCorrelationMatrix& c, double tol);

/// Constructive certificate for (1/r)C + ((r-1)/r)I where C = A^T A and the
/// r x n factor A has unit-norm columns: f(T) = (1/r) sum_i prod_{j in T} a_ij.
BGPCertificate corollary_certificate(const std::vector<std::vector<double>>& factor_rows);

/// Rank-two correlation matrix with entries cos(2*pi*(j-k)/m).
RealCorrelationMatrix cosine_correlation(int m);

struct RhoResult {
  double t_max = 0.0;
  std::optional<CutDistribution> certificate;  // at t_max
};

/// Largest grid t with t*C + (1-t)*I inside the rank-one hull; membership is
/// monotone along the shrinkage path, so bisection over the grid is valid.
RhoResult rho_bisection(const RealCorrelationMatrix& c, double resolution = 1e-6);

/// The explicit convex combination: weighted rank-one matrices s s^T.
std::vector<std::pair<double, RealMatrix>> rank_one_terms(const CutDistribution& p);

/// Bracket for the shrinkage constant at rank cap r: lower is the
/// constructive 1/r floor, upper the best tested matrix (clamped by the
/// analytic 2/3 bound when n >= 3, r >= 2).
struct RhoEstimate {
  int n = 0;
  int rank_cap = 0;
  double lower = 0.0;
  double upper = 1.0;
};

}  // namespace bistoch
