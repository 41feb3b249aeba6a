// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "bistoch/matrix.hpp"

namespace bistoch {

/// Structural predicates of a matrix at a given absolute tolerance.
struct StructureFlags {
  bool hermitian = false;
  bool unitary = false;
  bool hermitian_unitary = false;
  bool positive_semidefinite = false;
  double tolerance_used = 0.0;
};

/// Spectral decomposition of a Hermitian matrix: eigenvalues nonincreasing,
/// eigenvector columns orthonormal, each column's first nonzero component
/// made real positive so identical inputs give identical output.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Entrywise (Schur) product; dimensions must match.
ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix schur_product(const RealMatrix& a, const RealMatrix& b);

/// Kronecker product, dimension dim(a)*dim(b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix kron(const RealMatrix& a, const RealMatrix& b);

/// Unitary Fourier matrix with (j,k) entry n^{-1/2} exp(2*pi*i*j*k/n),
/// indices counted from zero.
ComplexMatrix fourier_matrix(int n);

StructureFlags classify(const ComplexMatrix& a, double tol);

/// Cyclic complex Jacobi; off-diagonal Frobenius norm driven below 1e-12.
/// Throws InputError when the input is not Hermitian within 1e-8.
Spectrum hermitian_eig(const ComplexMatrix& h);

/// Haar-distributed unitary: i.i.d. complex Gaussian matrix orthonormalized
/// column by column with positive real normalization, which is exactly the
/// phase convention that makes the law left-invariant. Deterministic per seed.
ComplexMatrix random_unitary(int n, std::uint64_t seed);

}  // namespace bistoch
