// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "bistoch/error.hpp"

namespace bistoch {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Entries are validated finite on
/// construction from user data; all operations preserve finiteness.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n);
  ComplexMatrix(int n, std::vector<cplx> entries);

  static ComplexMatrix identity(int n);

  int dim() const { return n_; }
  cplx& operator()(int i, int j) { return a_[idx(i, j)]; }
  const cplx& operator()(int i, int j) const { return a_[idx(i, j)]; }
  const std::vector<cplx>& data() const { return a_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) {
    a *= cplx(s, 0.0);
    return a;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<cplx> a_;
};

/// Dense square real matrix, row-major; the carrier for bistochastic and
/// correlation data.
class RealMatrix {
public:
  RealMatrix() = default;
  explicit RealMatrix(int n);
  RealMatrix(int n, std::vector<double> entries);

  static RealMatrix identity(int n);

  int dim() const { return n_; }
  double& operator()(int i, int j) { return a_[idx(i, j)]; }
  const double& operator()(int i, int j) const { return a_[idx(i, j)]; }
  const std::vector<double>& data() const { return a_; }

  RealMatrix transpose() const;
  double trace() const;
  double max_abs() const;
  double row_sum(int i) const;
  double col_sum(int j) const;

  ComplexMatrix to_complex() const;

  RealMatrix& operator+=(const RealMatrix& o);
  RealMatrix& operator-=(const RealMatrix& o);
  RealMatrix& operator*=(double s);

  friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) {
    a += b;
    return a;
  }
  friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) {
    a -= b;
    return a;
  }
  friend RealMatrix operator*(double s, RealMatrix a) {
    a *= s;
    return a;
  }

private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<double> a_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);
RealMatrix real_part(const ComplexMatrix& a);
double max_imag_abs(const ComplexMatrix& a);

}  // namespace bistoch
