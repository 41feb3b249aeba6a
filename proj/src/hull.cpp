// SPDX-License-Identifier: Apache-2.0
#include "bistoch/hull.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bistoch/lp.hpp"
#include "bistoch/rng.hpp"

namespace bistoch {

namespace {

constexpr double kStructTol = 1e-10;
constexpr double kConditionTol = 1e-9;  // slack below -this counts as violated

/// The 3x3 Hermitian unitary whose image is the two-thirds segment point of
/// the odd 3-cycle extreme matrix.
ComplexMatrix witness_unitary_3() {
  const double a = -1.0 / 3.0, b = 2.0 / 3.0;
  return RealMatrix(3, {a, b, b, b, a, b, b, b, a}).to_complex();
}

ComplexMatrix direct_sum_with_one(const ComplexMatrix& u) {
  const int n = u.dim();
  ComplexMatrix out(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = u(i, j);
  out(n, n) = 1.0;
  return out;
}

void collect_involutions(int n, int next, std::vector<int>& map, std::vector<char>& used,
                         std::vector<Permutation>& out) {
  while (next < n && used[next]) ++next;
  if (next == n) {
    out.emplace_back(map);
    return;
  }
  // fix the point
  used[next] = 1;
  map[next] = next;
  collect_involutions(n, next + 1, map, used, out);
  used[next] = 0;
  // or pair it with any later free point
  for (int j = next + 1; j < n; ++j) {
    if (used[j]) continue;
    used[next] = used[j] = 1;
    map[next] = j;
    map[j] = next;
    collect_involutions(n, next + 1, map, used, out);
    used[next] = used[j] = 0;
  }
}

std::string cycle_label(const Permutation& p) {
  std::string s = "involution:";
  bool any = false;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) > i) {
      s += "(" + std::to_string(i) + " " + std::to_string(p(i)) + ")";
      any = true;
    }
  }
  if (!any) s += "id";
  return s;
}

}  // namespace

HermitianUnitary make_hermitian_unitary(ComplexMatrix u, std::string label) {
  const StructureFlags f = classify(u, kStructTol);
  if (!f.hermitian_unitary)
    throw InputError("make_hermitian_unitary: matrix is not Hermitian unitary within 1e-10");
  const double tr = u.trace().real();
  const int n = u.dim();
  const int signature = static_cast<int>(std::lround((n - tr) / 2.0));
  if (std::abs(tr - (n - 2.0 * signature)) > 1e-8)
    throw InputError("make_hermitian_unitary: trace is not consistent with a +-1 spectrum");
  return HermitianUnitary{std::move(u), signature, std::move(label)};
}

BistochasticMatrix uni_image(const ComplexMatrix& u) {
  if (max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.dim())) > kStructTol)
    throw InputError("uni_image: input is not unitary within 1e-10");
  RealMatrix img(u.dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < u.dim(); ++j) img(i, j) = std::norm(u(i, j));
  return BistochasticMatrix(std::move(img));
}

HermitianUnitary random_hermitian_unitary(int n, int minus_count, std::uint64_t seed) {
  if (minus_count < 0 || minus_count > n)
    throw InputError("random_hermitian_unitary: minus_count must lie in [0, n]");
  const ComplexMatrix v = random_unitary(n, seed);
  // H = V diag(-1,..,-1,1,..,1) V*, assembled Hermitian by construction:
  // H = I - 2 * (sum of the first minus_count projectors).
  ComplexMatrix h = ComplexMatrix::identity(n);
  for (int k = 0; k < minus_count; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h(i, j) -= 2.0 * v(i, k) * std::conj(v(j, k));
  // exact Hermitian part kills the last rounding asymmetry
  h = 0.5 * (h + h.adjoint());
  std::string label = "random:n=" + std::to_string(n) + ",minus=" + std::to_string(minus_count) +
                      ",seed=" + std::to_string(seed);
  return make_hermitian_unitary(std::move(h), std::move(label));
}

std::vector<HermitianUnitary> involution_generators(int n) {
  if (n < 1) throw InputError("involution_generators: n must be >= 1");
  if (n > 10) throw CapError("involution_generators: n > 10 is over the factorial-growth cap");
  std::vector<Permutation> perms;
  std::vector<int> map(n, 0);
  std::vector<char> used(n, 0);
  collect_involutions(n, 0, map, used, perms);
  std::vector<HermitianUnitary> out;
  out.reserve(perms.size());
  for (const Permutation& p : perms)
    out.push_back(make_hermitian_unitary(p.to_matrix().to_complex(), cycle_label(p)));
  return out;
}

std::vector<HullWitness> paper_witnesses(int n) {
  if (n != 3 && n != 4) throw InputError("paper_witnesses: only n = 3 and n = 4 are supported");
  std::vector<HullWitness> out;
  if (n == 3) {
    HermitianUnitary u = make_hermitian_unitary(witness_unitary_3(), "witness3");
    BistochasticMatrix point = uni_image(u.matrix);
    out.push_back(HullWitness{"segment-2/3", std::move(point), {{1.0, std::move(u)}}, 1.0});
    return out;
  }
  // X: mean of the three disjoint-transposition involutions of S_4.
  const std::vector<std::vector<int>> pairs = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::pair<double, HermitianUnitary>> xdec;
  RealMatrix xsum(4);
  for (const auto& mp : pairs) {
    Permutation p(mp);
    xsum += p.to_matrix();
    xdec.emplace_back(1.0 / 3.0,
                      make_hermitian_unitary(p.to_matrix().to_complex(), cycle_label(p)));
  }
  xsum *= 1.0 / 3.0;
  out.push_back(HullWitness{"X", BistochasticMatrix(std::move(xsum)), std::move(xdec), 0.25});

  // Y: the 3x3 witness image direct-summed with a fixed point.
  HermitianUnitary uy = make_hermitian_unitary(direct_sum_with_one(witness_unitary_3()),
                                               "witness3+fixed");
  BistochasticMatrix ypoint = uni_image(uy.matrix);
  out.push_back(HullWitness{"Y", std::move(ypoint), {{1.0, std::move(uy)}}, 0.75});
  return out;
}

std::vector<NecessaryCondition> necessary_conditions(const BistochasticMatrix& a) {
  if (!a.symmetric())
    throw InputError("necessary_conditions: matrix must be symmetric bistochastic");
  std::vector<NecessaryCondition> out;
  const int n = a.dim();
  if (n % 2 == 1) {
    const double slack = a.matrix().trace() - 1.0 / n;
    out.push_back({"odd_trace_bound", slack, slack >= -kConditionTol});
  }
  if (n == 4) {
    // 3 * sum_{i != j} a_ii - a_jj >= 0 for each distinguished index; the
    // single proved index extends to all four by permutation similarity.
    for (int j = 0; j < 4; ++j) {
      double others = 0.0;
      for (int i = 0; i < 4; ++i)
        if (i != j) others += a(i, i);
      const double slack = 3.0 * others - a(j, j);
      out.push_back({"diag_functional_j=" + std::to_string(j + 1), slack,
                     slack >= -kConditionTol});
    }
  }
  return out;
}

MembershipVerdict sampled_hull_membership(const BistochasticMatrix& a,
                                          const std::vector<HermitianUnitary>& generators,
                                          double tol) {
  if (generators.empty()) throw InputError("sampled_hull_membership: no generators supplied");
  const int n = a.dim();
  const int cols = static_cast<int>(generators.size());

  std::vector<BistochasticMatrix> images;
  images.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.matrix.dim() != n)
      throw InputError("sampled_hull_membership: generator dimension mismatch");
    images.push_back(uni_image(g.matrix));
  }

  FeasibilityProblem lp;
  lp.num_vars = cols;
  lp.num_eq = n * n + 1;
  lp.E.assign(static_cast<std::size_t>(lp.num_eq) * cols, 0.0);
  lp.b.assign(lp.num_eq, 0.0);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j, ++row) {
      for (int g = 0; g < cols; ++g) lp.E[static_cast<std::size_t>(row) * cols + g] = images[g](i, j);
      lp.b[row] = a(i, j);
    }
  for (int g = 0; g < cols; ++g) lp.E[static_cast<std::size_t>(row) * cols + g] = 1.0;
  lp.b[row] = 1.0;

  const FeasibilityResult sol = solve_feasibility(lp, tol);
  MembershipVerdict verdict;
  if (sol.status == LpStatus::Feasible) {
    if (!verify_solution(lp, sol.x, 10.0 * tol))
      throw CapError("sampled_hull_membership: certificate failed independent re-verification");
    verdict.status = Membership::Inside;
    for (std::size_t g = 0; g < sol.x.size(); ++g)
      if (sol.x[g] > 1e-12) verdict.weights.emplace_back(g, sol.x[g]);
    verdict.detail = "convex certificate over " + std::to_string(cols) + " generators";
    return verdict;
  }

  for (const NecessaryCondition& c : necessary_conditions(a)) {
    if (!c.satisfied) {
      verdict.status = Membership::Outside;
      verdict.detail = "violated " + c.name + " (slack " + std::to_string(c.slack) + ")";
      return verdict;
    }
  }
  verdict.status = Membership::Unknown;
  verdict.detail = "no certificate over the sampled generators; no necessary condition violated";
  return verdict;
}

std::vector<HermitianUnitary> lambda_generator_set(int n, long sample_count, std::uint64_t seed) {
  std::vector<HermitianUnitary> gens = involution_generators(n);
  if (n == 3 || n == 4)
    for (HullWitness& w : paper_witnesses(n))
      for (auto& [wt, hu] : w.decomposition) gens.push_back(hu);
  Rng deriver(seed);
  for (long s = 0; s < sample_count; ++s) {
    const int minus = static_cast<int>(s % (n + 1));
    gens.push_back(random_hermitian_unitary(n, minus, deriver.next_u64()));
  }
  return gens;
}

LambdaBracket estimate_lambda(int n, const BistochasticMatrix& m, long sample_count,
                              std::uint64_t seed, double resolution) {
  if (m.dim() != n) throw InputError("estimate_lambda: dimension mismatch");
  if (resolution < 1e-6) throw InputError("estimate_lambda: resolution must be >= 1e-6");
  if (!m.symmetric() || !is_extreme_symmetric_bistochastic(m))
    throw InputError("estimate_lambda: M must be an extreme symmetric bistochastic matrix");

  const long steps = static_cast<long>(std::floor(1.0 / resolution));
  auto grid = [&](long i) { return std::min(1.0, i * resolution); };

  // Upper bound: first grid point violating a necessary condition. Slacks are
  // affine in k and hold at k=0, so the violation set is a tail interval.
  auto violated = [&](long i) {
    for (const NecessaryCondition& c : necessary_conditions(segment_point(m, grid(i))))
      if (!c.satisfied) return true;
    return false;
  };
  double upper = 1.0;
  if (violated(steps)) {
    long lo = 0, hi = steps;  // invariant: !violated(lo), violated(hi)
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      (violated(mid) ? hi : lo) = mid;
    }
    upper = grid(hi);
  }

  // Lower bound: last grid point with an LP inside-certificate. Membership is
  // monotone along the segment because W_n itself carries a certificate.
  const std::vector<HermitianUnitary> gens = lambda_generator_set(n, sample_count, seed);
  auto inside = [&](long i) {
    return sampled_hull_membership(segment_point(m, grid(i)), gens).status == Membership::Inside;
  };
  double lower = 0.0;
  if (inside(0)) {
    if (inside(steps)) {
      lower = grid(steps);
    } else {
      long lo = 0, hi = steps;  // invariant: inside(lo), !inside(hi)
      while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        (inside(mid) ? lo : hi) = mid;
      }
      lower = grid(lo);
    }
  }

  LambdaBracket bracket;
  bracket.n = n;
  bracket.lower = std::min(lower, upper);
  bracket.upper = upper;
  bracket.samples_used = sample_count;
  bracket.seed = seed;
  return bracket;
}

}  // namespace bistoch
