// SPDX-License-Identifier: Apache-2.0
#include "bistoch/birkhoff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bistoch {

namespace {

constexpr double kRowTol = 1e-9;
constexpr double kNegTol = 1e-12;

/// Rank of a dense rows x cols real matrix by Gaussian elimination with
/// partial pivoting. Pivots below tol count as zero.
int gaussian_rank(std::vector<double> a, int rows, int cols, double tol) {
  int rank = 0;
  auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * cols + c]; };
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    double best = tol;
    for (int r = rank; r < rows; ++r)
      if (std::abs(at(r, c)) > best) {
        best = std::abs(at(r, c));
        piv = r;
      }
    if (piv < 0) continue;
    for (int k = 0; k < cols; ++k) std::swap(at(rank, k), at(piv, k));
    const double d = at(rank, c);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const double f = at(r, c) / d;
      if (f == 0.0) continue;
      for (int k = 0; k < cols; ++k) at(r, k) -= f * at(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BistochasticMatrix::BistochasticMatrix(RealMatrix m) : m_(std::move(m)) {
  const int n = m_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m_(i, j) < -kNegTol)
        throw InputError("BistochasticMatrix: negative entry at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
  for (int i = 0; i < n; ++i) {
    if (std::abs(m_.row_sum(i) - 1.0) > kRowTol)
      throw InputError("BistochasticMatrix: row " + std::to_string(i) + " does not sum to one");
    if (std::abs(m_.col_sum(i) - 1.0) > kRowTol)
      throw InputError("BistochasticMatrix: column " + std::to_string(i) + " does not sum to one");
  }
  symmetric_ = max_abs_diff(m_, m_.transpose()) <= kRowTol;
}

KatzPartition::KatzPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("KatzPartition: must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw InputError("KatzPartition: parts must be positive");
    if (p % 2 == 0 && p != 2)
      throw InputError("KatzPartition: part " + std::to_string(p) + " is even and not 2");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  const int n = static_cast<int>(map_.size());
  if (n == 0) throw InputError("Permutation: empty mapping");
  std::vector<char> seen(n, 0);
  for (int v : map_) {
    if (v < 0 || v >= n || seen[v]) throw InputError("Permutation: mapping is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

bool Permutation::is_involution() const {
  for (int i = 0; i < size(); ++i)
    if (map_[map_[i]] != i) return false;
  return true;
}

RealMatrix Permutation::to_matrix() const {
  RealMatrix p(size());
  for (int j = 0; j < size(); ++j) p(map_[j], j) = 1.0;
  return p;
}

BistochasticMatrix flat_matrix(int n) {
  if (n < 1) throw InputError("flat_matrix: n must be >= 1");
  RealMatrix w(n);
  const double v = 1.0 / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = v;
  return BistochasticMatrix(std::move(w));
}

BistochasticMatrix katz_block(int k) {
  if (k < 1) throw InputError("katz_block: k must be >= 1");
  if (k == 1) return BistochasticMatrix(RealMatrix(1, {1.0}));
  if (k == 2) return BistochasticMatrix(RealMatrix(2, {0.0, 1.0, 1.0, 0.0}));
  if (k % 2 == 0) throw InputError("katz_block: even size " + std::to_string(k) +
                                   " is not a valid Katz block (only 2 or odd)");
  RealMatrix b(k);
  for (int i = 0; i < k; ++i) {
    b(i, (i + 1) % k) = 0.5;
    b(i, (i + k - 1) % k) = 0.5;
  }
  return BistochasticMatrix(std::move(b));
}

namespace {

void enumerate_partitions(int remaining, int limit, std::vector<int>& cur,
                          std::vector<KatzPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, limit); part >= 1; --part) {
    if (part % 2 == 0 && part != 2) continue;
    cur.push_back(part);
    enumerate_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<KatzPartition> katz_partitions(int n) {
  if (n < 1) throw InputError("katz_partitions: n must be >= 1");
  std::vector<KatzPartition> out;
  std::vector<int> cur;
  enumerate_partitions(n, n, cur, out);
  return out;
}

BistochasticMatrix katz_extreme_point(const KatzPartition& partition, const Permutation& perm) {
  const int n = partition.total();
  if (perm.size() != n)
    throw InputError("katz_extreme_point: permutation size does not match partition total");
  RealMatrix block(n);
  int off = 0;
  for (int part : partition.parts()) {
    const BistochasticMatrix b = katz_block(part);
    for (int i = 0; i < part; ++i)
      for (int j = 0; j < part; ++j) block(off + i, off + j) = b(i, j);
    off += part;
  }
  RealMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(perm(i), perm(j)) = block(i, j);
  return BistochasticMatrix(std::move(out));
}

BistochasticCheck check_bistochastic(const RealMatrix& a, double tol) {
  if (tol <= 0.0) throw InputError("check_bistochastic: tolerance must be positive");
  BistochasticCheck c;
  const int n = a.dim();
  bool ok = true;
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      if (a(i, j) < -tol) ok = false;
  for (int i = 0; i < n && ok; ++i)
    if (std::abs(a.row_sum(i) - 1.0) > tol || std::abs(a.col_sum(i) - 1.0) > tol) ok = false;
  c.doubly_stochastic = ok;
  c.symmetric = max_abs_diff(a, a.transpose()) <= tol;
  return c;
}

bool is_extreme_symmetric_bistochastic(const BistochasticMatrix& m, double tol) {
  if (!m.symmetric())
    throw InputError("is_extreme_symmetric_bistochastic: matrix is not symmetric");
  const int n = m.dim();

  // Variables: support pairs (i <= j). Constraints: n zero row sums. M is
  // extreme iff the system has only the trivial solution.
  std::vector<std::pair<int, int>> support;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (std::abs(m(i, j)) > tol) support.emplace_back(i, j);

  const int vars = static_cast<int>(support.size());
  if (vars > n) return false;  // rank <= n < vars forces a nontrivial direction

  std::vector<double> sys(static_cast<std::size_t>(n) * vars, 0.0);
  for (int v = 0; v < vars; ++v) {
    const auto [i, j] = support[v];
    sys[static_cast<std::size_t>(i) * vars + v] += 1.0;
    if (i != j) sys[static_cast<std::size_t>(j) * vars + v] += 1.0;
  }
  return gaussian_rank(std::move(sys), n, vars, 1e-9) == vars;
}

BistochasticMatrix segment_point(const BistochasticMatrix& m, double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw InputError("segment_point: k must lie in [0,1]");
  const int n = m.dim();
  RealMatrix out(n);
  const double w = (1.0 - k) / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = k * m(i, j) + w;
  return BistochasticMatrix(std::move(out));
}

}  // namespace bistoch
