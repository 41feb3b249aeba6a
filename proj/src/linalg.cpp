// SPDX-License-Identifier: Apache-2.0
#include "bistoch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bistoch/rng.hpp"

namespace bistoch {

ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("schur_product: dimension mismatch");
  ComplexMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) * b(i, j);
  return r;
}

RealMatrix schur_product(const RealMatrix& a, const RealMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("schur_product: dimension mismatch");
  RealMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) * b(i, j);
  return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  RealMatrix r(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

ComplexMatrix fourier_matrix(int n) {
  if (n < 1) throw InputError("fourier_matrix: n must be >= 1");
  ComplexMatrix f(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      // reduce the exponent mod n before evaluating the phase
      const int e = static_cast<int>((static_cast<long long>(j) * k) % n);
      f(j, k) = std::polar(scale, 2.0 * M_PI * e / n);
    }
  return f;
}

StructureFlags classify(const ComplexMatrix& a, double tol) {
  if (tol <= 0.0) throw InputError("classify: tolerance must be positive");
  StructureFlags flags;
  flags.tolerance_used = tol;
  flags.hermitian = max_abs_diff(a, a.adjoint()) <= tol;
  flags.unitary = max_abs_diff(a * a.adjoint(), ComplexMatrix::identity(a.dim())) <= tol;
  flags.hermitian_unitary = flags.hermitian && flags.unitary;
  if (flags.hermitian) {
    const Spectrum sp = hermitian_eig(a);
    flags.positive_semidefinite = sp.eigenvalues.back() >= -tol;
  }
  return flags;
}

Spectrum hermitian_eig(const ComplexMatrix& h) {
  const int n = h.dim();
  if (max_abs_diff(h, h.adjoint()) > 1e-8)
    throw InputError("hermitian_eig: input is not Hermitian");

  // Work on the exact Hermitian part so rounding asymmetry cannot bias sweeps.
  ComplexMatrix a = 0.5 * (h + h.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double off_tol = 1e-12;
  const double small_beta = off_tol / (4.0 * n);
  const int max_sweeps = 100;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off_sq = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off_sq += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off_sq) <= off_tol) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double beta = std::abs(a(p, q));
        if (beta <= small_beta) continue;
        const cplx psi = a(p, q) / beta;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * beta);
        const double root = std::sqrt(1.0 + tau * tau);
        const double t = (tau >= 0.0) ? 1.0 / (tau + root) : 1.0 / (tau - root);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx psib = std::conj(psi);

        // J = [[c, s], [-s*conj(psi), c*conj(psi)]] on the (p,q) plane.
        for (int k = 0; k < n; ++k) {  // A <- A J
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * psib * akq;
          a(k, q) = s * akp + c * psib * akq;
        }
        for (int k = 0; k < n; ++k) {  // A <- J* A
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * psi * aqk;
          a(q, k) = s * apk + c * psi * aqk;
        }
        for (int k = 0; k < n; ++k) {  // V <- V J
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * psib * vkq;
          v(k, q) = s * vkp + c * psib * vkq;
        }
        a(p, q) = a(q, p) = cplx(0.0, 0.0);
        a(p, p) = cplx(app - t * beta, 0.0);
        a(q, q) = cplx(aqq + t * beta, 0.0);
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });

  Spectrum sp;
  sp.eigenvalues.resize(n);
  sp.eigenvectors = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    sp.eigenvalues[j] = a(src, src).real();
    for (int i = 0; i < n; ++i) sp.eigenvectors(i, j) = v(i, src);
  }

  // Phase convention: first component above 1e-12 made real positive.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double mag = std::abs(sp.eigenvectors(i, j));
      if (mag > 1e-12) {
        const cplx phase = sp.eigenvectors(i, j) / mag;
        const cplx fix = std::conj(phase);
        for (int k = 0; k < n; ++k) sp.eigenvectors(k, j) *= fix;
        break;
      }
    }
  }
  return sp;
}

ComplexMatrix random_unitary(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_unitary: n must be >= 1");
  Rng rng(seed);
  ComplexMatrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      g(i, j) = cplx(re, im) * M_SQRT1_2;
    }

  // Modified Gram-Schmidt with a re-orthogonalization pass; the positive real
  // column normalization is the left-invariance phase correction.
  ComplexMatrix q(n);
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> col(n);
    for (int i = 0; i < n; ++i) col[i] = g(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        cplx proj(0.0, 0.0);
        for (int i = 0; i < n; ++i) proj += std::conj(q(i, k)) * col[i];
        for (int i = 0; i < n; ++i) col[i] -= proj * q(i, k);
      }
    }
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i) norm_sq += std::norm(col[i]);
    double norm = std::sqrt(norm_sq);
    while (norm < 1e-12) {
      // Degenerate draw; replace the column with fresh Gaussians.
      for (int i = 0; i < n; ++i) col[i] = cplx(rng.gaussian(), rng.gaussian()) * M_SQRT1_2;
      for (int pass = 0; pass < 2; ++pass)
        for (int k = 0; k < j; ++k) {
          cplx proj(0.0, 0.0);
          for (int i = 0; i < n; ++i) proj += std::conj(q(i, k)) * col[i];
          for (int i = 0; i < n; ++i) col[i] -= proj * q(i, k);
        }
      norm_sq = 0.0;
      for (int i = 0; i < n; ++i) norm_sq += std::norm(col[i]);
      norm = std::sqrt(norm_sq);
    }
    for (int i = 0; i < n; ++i) q(i, j) = col[i] / norm;
  }
  return q;
}

}  // namespace bistoch
