// SPDX-License-Identifier: Apache-2.0
#include "bistoch/cut_polytope.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "bistoch/linalg.hpp"
#include "bistoch/lp.hpp"

namespace bistoch {

namespace {

constexpr int kDimensionCap = 12;
constexpr double kCorrTol = 1e-9;

}  // namespace

RealCorrelationMatrix::RealCorrelationMatrix(RealMatrix m) : m_(std::move(m)) {
  const int n = m_.dim();
  if (max_abs_diff(m_, m_.transpose()) > kCorrTol)
    throw InputError("RealCorrelationMatrix: matrix is not symmetric");
  for (int i = 0; i < n; ++i)
    if (std::abs(m_(i, i) - 1.0) > kCorrTol)
      throw InputError("RealCorrelationMatrix: diagonal entry " + std::to_string(i) +
                       " is not one");
  const Spectrum sp = hermitian_eig(m_.to_complex());
  if (sp.eigenvalues.back() < -kCorrTol)
    throw InputError("RealCorrelationMatrix: matrix is not positive semidefinite");
}

void walsh_hadamard(std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw InputError("walsh_hadamard: length must be a power of two");
  for (std::size_t len = 1; len < n; len <<= 1)
    for (std::size_t i = 0; i < n; i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const double a = v[j];
        const double b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
}

std::string canonical_sign_string(int n, unsigned mask) {
  std::string s(n, '+');
  for (int i = 1; i < n; ++i)
    if (mask & (1u << (i - 1))) s[i] = '-';
  return s;
}

int sign_at(const std::string& signs, int i) { return signs[i] == '-' ? -1 : 1; }

std::optional<CutDistribution> cut_membership(const RealCorrelationMatrix& c, double tol) {
  const int n = c.dim();
  if (n > kDimensionCap)
    throw CapError("cut_membership: dimension cap is " + std::to_string(kDimensionCap));

  const unsigned cols = 1u << (n - 1);  // canonical sign vectors, s_1 = +1
  const int pairs = n * (n - 1) / 2;

  FeasibilityProblem lp;
  lp.num_vars = static_cast<int>(cols);
  lp.num_eq = 1 + pairs;
  lp.E.assign(static_cast<std::size_t>(lp.num_eq) * cols, 0.0);
  lp.b.assign(lp.num_eq, 0.0);

  for (unsigned s = 0; s < cols; ++s) lp.E[s] = 1.0;
  lp.b[0] = 1.0;
  int row = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++row) {
      for (unsigned s = 0; s < cols; ++s) {
        const int si = (i == 0) ? 1 : ((s >> (i - 1)) & 1u ? -1 : 1);
        const int sj = (s >> (j - 1)) & 1u ? -1 : 1;  // j >= 1 always here
        lp.E[static_cast<std::size_t>(row) * cols + s] = static_cast<double>(si * sj);
      }
      lp.b[row] = c(i, j);
    }

  const FeasibilityResult sol = solve_feasibility(lp, tol);
  if (sol.status == LpStatus::Infeasible) return std::nullopt;

  CutDistribution dist;
  dist.n = n;
  for (unsigned s = 0; s < cols; ++s)
    if (sol.x[s] > 1e-12) dist.weights.emplace_back(canonical_sign_string(n, s), sol.x[s]);
  return dist;
}

RealMatrix distribution_moments(const CutDistribution& p) {
  RealMatrix m(p.n);
  for (int i = 0; i < p.n; ++i) m(i, i) = 1.0;
  for (const auto& [signs, w] : p.weights)
    for (int i = 0; i < p.n; ++i)
      for (int j = i + 1; j < p.n; ++j) {
        const double v = w * sign_at(signs, i) * sign_at(signs, j);
        m(i, j) += v;
        m(j, i) += v;
      }
  return m;
}

BGPCertificate bgp_from_distribution(const CutDistribution& p) {
  const int n = p.n;
  std::vector<double> f(static_cast<std::size_t>(1) << n, 0.0);
  for (const auto& [signs, w] : p.weights) {
    unsigned mask = 0;  // subset A = indices carrying '-'; canonical means bit 0 clear
    for (int i = 0; i < n; ++i)
      if (signs[i] == '-') mask |= 1u << i;
    f[mask] += w;
  }
  walsh_hadamard(f);
  return BGPCertificate{n, std::move(f)};
}

BgpCheck check_bgp(const BGPCertificate& f, const RealCorrelationMatrix& c, double tol) {
  BgpCheck out;
  if (f.n != c.dim() || f.f.size() != (static_cast<std::size_t>(1) << f.n))
    throw InputError("check_bgp: certificate shape does not match the matrix");
  out.empty_set_error = std::abs(f.f[0] - 1.0);
  for (int i = 0; i < f.n; ++i)
    for (int j = i + 1; j < f.n; ++j) {
      const std::size_t mask = (1u << i) | (1u << j);
      out.pair_error = std::max(out.pair_error, std::abs(f.f[mask] - c(i, j)));
    }
  std::vector<double> w = f.f;
  walsh_hadamard(w);
  out.walsh_min = *std::min_element(w.begin(), w.end());
  out.ok = out.empty_set_error <= tol && out.pair_error <= tol && out.walsh_min >= -tol;
  return out;
}

bool verify_bgp(const BGPCertificate& f, const RealCorrelationMatrix& c, double tol) {
  return check_bgp(f, c, tol).ok;
}

BGPCertificate corollary_certificate(const std::vector<std::vector<double>>& factor_rows) {
  const int r = static_cast<int>(factor_rows.size());
  if (r == 0) throw InputError("corollary_certificate: empty factor");
  const int n = static_cast<int>(factor_rows[0].size());
  if (n == 0 || n > 20) throw InputError("corollary_certificate: bad column count");
  for (const auto& row : factor_rows)
    if (static_cast<int>(row.size()) != n)
      throw InputError("corollary_certificate: ragged factor rows");
  for (int j = 0; j < n; ++j) {
    double nrm = 0.0;
    for (int i = 0; i < r; ++i) {
      if (std::abs(factor_rows[i][j]) > 1.0 + 1e-12)
        throw InputError("corollary_certificate: entries must lie in [-1, 1]");
      nrm += factor_rows[i][j] * factor_rows[i][j];
    }
    if (std::abs(std::sqrt(nrm) - 1.0) > 1e-9)
      throw InputError("corollary_certificate: column " + std::to_string(j) +
                       " is not unit norm");
  }

  const std::size_t size = static_cast<std::size_t>(1) << n;
  std::vector<double> g(size, 0.0);
  std::vector<double> prod(size, 0.0);
  for (int i = 0; i < r; ++i) {
    prod[0] = 1.0;
    for (std::size_t mask = 1; mask < size; ++mask) {
      const std::size_t low = mask & (~mask + 1);
      const int bit = std::countr_zero(low);
      prod[mask] = prod[mask ^ low] * factor_rows[i][bit];
    }
    for (std::size_t mask = 0; mask < size; ++mask) g[mask] += prod[mask];
  }
  for (double& v : g) v /= r;
  return BGPCertificate{n, std::move(g)};
}

RealCorrelationMatrix cosine_correlation(int m) {
  if (m < 1) throw InputError("cosine_correlation: m must be >= 1");
  RealMatrix c(m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) c(j, k) = (j == k) ? 1.0 : std::cos(2.0 * M_PI * (j - k) / m);
  return RealCorrelationMatrix(std::move(c));
}

RhoResult rho_bisection(const RealCorrelationMatrix& c, double resolution) {
  if (resolution <= 0.0 || resolution > 0.5)
    throw InputError("rho_bisection: resolution must lie in (0, 0.5]");
  const int n = c.dim();
  const RealMatrix eye = RealMatrix::identity(n);

  auto shrunk = [&](double t) {
    RealMatrix m = eye;
    m *= (1.0 - t);
    RealMatrix part = c.matrix();
    part *= t;
    m += part;
    return RealCorrelationMatrix(std::move(m));
  };
  auto feasible = [&](double t) { return cut_membership(shrunk(t), 1e-9); };

  const long steps = static_cast<long>(std::floor(1.0 / resolution));
  auto grid = [&](long i) { return std::min(1.0, i * resolution); };

  RhoResult out;
  if (auto full = feasible(1.0)) {
    out.t_max = 1.0;
    out.certificate = std::move(full);
    return out;
  }
  // t=0 is the identity, always representable; membership is monotone along
  // the shrinkage path, so the feasible grid indices form a prefix.
  long lo = 0, hi = steps;
  auto cert_lo = feasible(0.0);
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (auto cert = feasible(grid(mid))) {
      lo = mid;
      cert_lo = std::move(cert);
    } else {
      hi = mid;
    }
  }
  out.t_max = grid(lo);
  out.certificate = std::move(cert_lo);
  return out;
}

std::vector<std::pair<double, RealMatrix>> rank_one_terms(const CutDistribution& p) {
  std::vector<std::pair<double, RealMatrix>> out;
  out.reserve(p.weights.size());
  for (const auto& [signs, w] : p.weights) {
    RealMatrix m(p.n);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        m(i, j) = static_cast<double>(sign_at(signs, i) * sign_at(signs, j));
    out.emplace_back(w, std::move(m));
  }
  return out;
}

}  // namespace bistoch
