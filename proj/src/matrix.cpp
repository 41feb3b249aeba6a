// SPDX-License-Identifier: Apache-2.0
#include "bistoch/matrix.hpp"

#include <algorithm>
#include <string>

namespace bistoch {

namespace {

int checked_dim(int n) {
  if (n <= 0) throw InputError("matrix dimension must be positive, got " + std::to_string(n));
  return n;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int n)
    : n_(checked_dim(n)), a_(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(int n, std::vector<cplx> entries)
    : n_(checked_dim(n)), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n_) * n_)
    throw InputError("ComplexMatrix: entry count does not match dimension");
  for (const cplx& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError("ComplexMatrix: entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(i, j));
  return r;
}

cplx ComplexMatrix::trace() const {
  cplx t(0.0, 0.0);
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.n_ != n_) throw InputError("ComplexMatrix: dimension mismatch in addition");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.n_ != n_) throw InputError("ComplexMatrix: dimension mismatch in subtraction");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : a_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("ComplexMatrix: dimension mismatch in product");
  const int n = a.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

RealMatrix::RealMatrix(int n) : n_(checked_dim(n)), a_(static_cast<std::size_t>(n) * n, 0.0) {}

RealMatrix::RealMatrix(int n, std::vector<double> entries)
    : n_(checked_dim(n)), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n_) * n_)
    throw InputError("RealMatrix: entry count does not match dimension");
  for (double v : a_)
    if (!std::isfinite(v)) throw InputError("RealMatrix: entries must be finite");
}

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

double RealMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double RealMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double RealMatrix::row_sum(int i) const {
  double s = 0.0;
  for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

double RealMatrix::col_sum(int j) const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += (*this)(i, j);
  return s;
}

ComplexMatrix RealMatrix::to_complex() const {
  ComplexMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = cplx((*this)(i, j), 0.0);
  return r;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& o) {
  if (o.n_ != n_) throw InputError("RealMatrix: dimension mismatch in addition");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

RealMatrix& RealMatrix::operator-=(const RealMatrix& o) {
  if (o.n_ != n_) throw InputError("RealMatrix: dimension mismatch in subtraction");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

RealMatrix& RealMatrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

RealMatrix real_part(const ComplexMatrix& a) {
  RealMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j).real();
  return r;
}

double max_imag_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j).imag()));
  return m;
}

}  // namespace bistoch
