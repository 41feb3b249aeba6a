// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bistoch/cut_polytope.hpp"
#include "bistoch/hull.hpp"
#include "bistoch/linalg.hpp"
#include "bistoch/matrix.hpp"

namespace bistoch {

/// Completely positive map as a weighted Kraus family:
/// A -> sum_i w_i V_i A V_i*. Weights are positive; 1 for plain Kraus form.
struct KrausTerm {
  double weight = 1.0;
  ComplexMatrix op;
};

struct KrausMap {
  int n = 0;
  std::vector<KrausTerm> terms;
};

KrausMap make_kraus_map(int n, std::vector<KrausTerm> terms);

ComplexMatrix apply_map(const KrausMap& phi, const ComplexMatrix& a);

/// Adjoint under the trace inner product: every operator conjugate-transposed.
KrausMap dual_map(const KrausMap& phi);

/// Block matrix with (i,j) block Phi(E_ij); PSD iff the map is CP, and equal
/// Choi matrices is the canonical identity test for maps (Kraus lists are not).
ComplexMatrix choi_matrix(const KrausMap& phi);

struct MapProperties {
  bool cp = false;
  bool trace_preserving = false;
  bool unital = false;
  bool doubly_stochastic = false;
  bool self_dual = false;
  double tolerance_used = 0.0;
};
MapProperties map_properties(const KrausMap& phi, double tol = 1e-9);

/// Cartesian split V = K + iL of each Kraus operator of a self-dual map;
/// the result has Hermitian operators and the same Choi matrix. Operators of
/// norm <= 1e-12 are dropped. Throws InputError when the map is not self-dual.
KrausMap hermitian_kraus(const KrausMap& phi, double tol = 1e-9);

/// The matrix of the action on diagonals: Delta(i,j) = (Phi(E_jj))_ii, which
/// is sum_t w_t |(V_t)_ij|^2.
RealMatrix delta_matrix(const KrausMap& phi);

/// Schur multiplier map A -> C o A realized with diagonal Kraus operators
/// from a PSD factorization of the correlation matrix C.
KrausMap schur_map(const ComplexMatrix& c);

/// Recover C = Phi(J) from a map fixing all diagonal matrices, verifying
/// Phi(E_ij) = C o E_ij on every matrix unit. Throws InputError otherwise.
ComplexMatrix extract_schur(const KrausMap& phi, double tol = 1e-9);

/// Mixed (diagonal) unitary map from a rank-one decomposition of a
/// correlation matrix: terms (p_k, diag(v_k)) with unimodular v_k entries.
/// When every v_k is +-1-valued the operators are Hermitian unitary.
KrausMap mixed_from_rank1(const std::vector<std::pair<double, std::vector<cplx>>>& decomposition);

/// Unitary conjugation A -> U A U*.
KrausMap conjugation_map(const ComplexMatrix& u);

/// outer(inner(A)): pairwise Kraus products.
KrausMap compose(const KrausMap& outer, const KrausMap& inner);

/// Phi tensor id_q: every Kraus operator V -> V tensor I_q.
KrausMap tensor_with_identity(const KrausMap& phi, int q);

/// Convex combination of maps: union of the scaled term lists.
KrausMap mix_maps(const std::vector<double>& weights, const std::vector<KrausMap>& maps);

/// Xi = Gamma_{U*} o (Schur by I) o Gamma_U. For flat-modulus U (Fourier
/// kind) this sends every diagonal D to tr(D)/n * I and has Delta = W_n.
KrausMap xi_map(int n, const ComplexMatrix& u);

/// Convex combination of Hermitian-unitary conjugations.
struct MixedHermitianUnitary {
  int n = 0;
  std::vector<std::pair<double, HermitianUnitary>> terms;
};

KrausMap to_kraus_map(const MixedHermitianUnitary& m);

/// Recognize a KrausMap whose operators are all Hermitian unitary and whose
/// weights form a convex combination.
std::optional<MixedHermitianUnitary> as_mixed_hermitian_unitary(const KrausMap& phi,
                                                                double tol = 1e-9);

struct Prop4Report {
  int m = 0;
  int q = 0;
  int n = 0;
  double rho = 0.0;
  bool lp_feasible = false;
  double max_hermitian_unitary_defect = 0.0;
  double delta_residual = 0.0;            // |Delta_Psi - (rho M + (1-rho) W_n)|
  double shift_identity_residual = 0.0;   // Schur action on Fourier projectors
  std::optional<CutDistribution> distribution;
  std::optional<MixedHermitianUnitary> psi;
};

/// Build M = B_m tensor I_q, shrink the rank-two correlation matrix
/// q(C_m tensor W_q) by rho, certify it in the rank-one hull, conjugate the
/// sign-diagonal mixture by F_m tensor F_q, and check the resulting mixed
/// Hermitian unitary map has Delta = rho M + (1-rho) W_n. An infeasible rho
/// is reported in the result, not thrown.
Prop4Report proposition4_pipeline(int m, int q, double rho);

/// Decompose (Gamma_U + Gamma_{U*})/2 for a 2x2 unitary as
/// p Gamma_I + (1-p) Gamma_R with p = (1+cos(theta+phi))/2 and R the
/// Hermitian unitary V diag(1,-1) V* from the spectral decomposition of U.
MixedHermitianUnitary symmetrized_unitary_2x2(const ComplexMatrix& u);

}  // namespace bistoch
