// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "bistoch/matrix.hpp"

namespace bistoch {

/// Real nonnegative square matrix with unit row and column sums (within 1e-9).
/// The symmetric flag is measured at construction, never asserted.
class BistochasticMatrix {
public:
  explicit BistochasticMatrix(RealMatrix m);

  int dim() const { return m_.dim(); }
  const RealMatrix& matrix() const { return m_; }
  bool symmetric() const { return symmetric_; }
  double operator()(int i, int j) const { return m_(i, j); }

private:
  RealMatrix m_;
  bool symmetric_ = false;
};

/// Partition of n whose parts are odd or equal to two, stored sorted
/// descending.
class KatzPartition {
public:
  explicit KatzPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }

private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Bijection on {0..n-1}; to_matrix() returns P with P(sigma(j), j) = 1, so
/// conjugation P M P^T relocates index i to sigma(i).
class Permutation {
public:
  explicit Permutation(std::vector<int> mapping);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[i]; }
  const std::vector<int>& mapping() const { return map_; }
  bool is_involution() const;
  RealMatrix to_matrix() const;

private:
  std::vector<int> map_;
};

/// The flat matrix with every entry 1/n, the common centroid.
BistochasticMatrix flat_matrix(int n);

/// Cycle block: (1) for k=1, the swap for k=2, and for odd k >= 3 the matrix
/// with 1/2 at i-j = +-1 (mod k). Even k >= 4 is rejected.
BistochasticMatrix katz_block(int k);

/// All partitions of n into parts that are odd or equal to two, in
/// descending-lexicographic order, no duplicates.
std::vector<KatzPartition> katz_partitions(int n);

/// P * blockdiag(B_{n_1},...,B_{n_m}) * P^T.
BistochasticMatrix katz_extreme_point(const KatzPartition& partition, const Permutation& perm);

struct BistochasticCheck {
  bool doubly_stochastic = false;
  bool symmetric = false;
};
BistochasticCheck check_bistochastic(const RealMatrix& a, double tol);

/// Extreme point test for the symmetric bistochastic polytope: the matrix is
/// extreme iff the only symmetric direction with zero row sums supported on
/// support(M) is zero, decided by the rank of the row-sum system. Entries
/// with |m_ij| <= tol are treated as structural zeros.
bool is_extreme_symmetric_bistochastic(const BistochasticMatrix& m, double tol = 1e-9);

/// k*M + (1-k)*W_n for k in [0,1].
BistochasticMatrix segment_point(const BistochasticMatrix& m, double k);

}  // namespace bistoch
