// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bistoch/birkhoff.hpp"
#include "bistoch/linalg.hpp"

namespace bistoch {

/// Hermitian unitary matrix (eigenvalues +-1) together with its signature,
/// the count of -1 eigenvalues, recovered from the trace. The label is a
/// replayable fingerprint ("involution:...", "random:seed=...").
struct HermitianUnitary {
  ComplexMatrix matrix;
  int signature = 0;
  std::string label;
};

/// Validates hermitian+unitary within 1e-10 and computes the signature.
HermitianUnitary make_hermitian_unitary(ComplexMatrix u, std::string label = "");

/// Entrywise squared moduli |u_ij|^2 of a unitary; doubly stochastic, and
/// symmetric when U is Hermitian. Requires unitarity within 1e-10.
BistochasticMatrix uni_image(const ComplexMatrix& u);

/// V diag(-1,..,-1,1,..,1) V* with V Haar-random; minus_count eigenvalues -1.
HermitianUnitary random_hermitian_unitary(int n, int minus_count, std::uint64_t seed);

/// All symmetric n x n permutation matrices (the involutions of S_n) as
/// Hermitian unitaries. Capped at n <= 10.
std::vector<HermitianUnitary> involution_generators(int n);

/// An exactly decomposed hull point: the bistochastic matrix, its convex
/// decomposition into Hermitian-unitary images, and the weight it carries in
/// the two-thirds witness combination for its dimension.
struct HullWitness {
  std::string name;
  BistochasticMatrix point;
  std::vector<std::pair<double, HermitianUnitary>> decomposition;
  double mix_weight = 1.0;
};

/// Exact witnesses showing the two-thirds segment point lies in the hull:
/// n=3 gives one Hermitian-unitary image; n=4 gives X (mean of the three
/// disjoint-transposition involutions, weight 1/4) and Y (3x3 witness plus a
/// fixed point, weight 3/4).
std::vector<HullWitness> paper_witnesses(int n);

struct NecessaryCondition {
  std::string name;
  double slack = 0.0;   // >= 0 when satisfied
  bool satisfied = true;
};

/// Sound outer tests for hull membership: trace(A) >= 1/n for odd n, and for
/// n=4 the functional 3*sum_{i!=j} a_ii - a_jj >= 0 for each distinguished
/// index j (valid for every j by permutation-similarity invariance).
std::vector<NecessaryCondition> necessary_conditions(const BistochasticMatrix& a);

enum class Membership { Inside, Outside, Unknown };

/// Inside certificate: convex weights over the generator list, indices into
/// the caller's vector. Outside only ever comes from a violated necessary
/// condition; LP infeasibility over a finite generator sample alone is
/// reported as Unknown.
struct MembershipVerdict {
  Membership status = Membership::Unknown;
  std::vector<std::pair<std::size_t, double>> weights;
  std::string detail;
};

MembershipVerdict sampled_hull_membership(const BistochasticMatrix& a,
                                          const std::vector<HermitianUnitary>& generators,
                                          double tol = 1e-9);

struct LambdaBracket {
  int n = 0;
  double lower = 0.0;   // certified by a sampled-hull inside certificate
  double upper = 1.0;   // certified by a violated necessary condition
  long samples_used = 0;
  std::uint64_t seed = 0;
};

/// The deterministic generator set used by estimate_lambda: involutions, the
/// exact witnesses for n in {3,4}, and sample_count random Hermitian
/// unitaries stratified over all signatures.
std::vector<HermitianUnitary> lambda_generator_set(int n, long sample_count, std::uint64_t seed);

/// Bracket the largest k with k*M + (1-k)*W_n inside the hull: lower from LP
/// certificates over the sampled generators, upper from the first grid point
/// violating a necessary condition. Requires M extreme symmetric
/// bistochastic and resolution >= 1e-6.
LambdaBracket estimate_lambda(int n, const BistochasticMatrix& m, long sample_count,
                              std::uint64_t seed, double resolution);

}  // namespace bistoch
