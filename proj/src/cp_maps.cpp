// SPDX-License-Identifier: Apache-2.0
#include "bistoch/cp_maps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bistoch {

namespace {

constexpr double kUnitaryTol = 1e-10;

void validate_terms(int n, const std::vector<KrausTerm>& terms) {
  if (n < 1) throw InputError("KrausMap: dimension must be positive");
  if (terms.empty()) throw InputError("KrausMap: at least one Kraus term required");
  for (const KrausTerm& t : terms) {
    if (!(t.weight > 0.0) || !std::isfinite(t.weight))
      throw InputError("KrausMap: weights must be positive and finite");
    if (t.op.dim() != n) throw InputError("KrausMap: operator dimension mismatch");
  }
}

}  // namespace

KrausMap make_kraus_map(int n, std::vector<KrausTerm> terms) {
  validate_terms(n, terms);
  return KrausMap{n, std::move(terms)};
}

ComplexMatrix apply_map(const KrausMap& phi, const ComplexMatrix& a) {
  if (a.dim() != phi.n) throw InputError("apply_map: argument dimension mismatch");
  ComplexMatrix out(phi.n);
  for (const KrausTerm& t : phi.terms) {
    ComplexMatrix part = t.op * a * t.op.adjoint();
    part *= cplx(t.weight, 0.0);
    out += part;
  }
  return out;
}

KrausMap dual_map(const KrausMap& phi) {
  KrausMap d;
  d.n = phi.n;
  d.terms.reserve(phi.terms.size());
  for (const KrausTerm& t : phi.terms) d.terms.push_back({t.weight, t.op.adjoint()});
  return d;
}

ComplexMatrix choi_matrix(const KrausMap& phi) {
  const int n = phi.n;
  ComplexMatrix choi(n * n);
  // Choi[(i,a),(j,b)] = sum_t w V_ai conj(V_bj): block (i,j) holds Phi(E_ij).
  for (const KrausTerm& t : phi.terms) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            choi(i * n + a, j * n + b) += t.weight * t.op(a, i) * std::conj(t.op(b, j));
  }
  return choi;
}

MapProperties map_properties(const KrausMap& phi, double tol) {
  if (tol <= 0.0) throw InputError("map_properties: tolerance must be positive");
  validate_terms(phi.n, phi.terms);
  MapProperties props;
  props.tolerance_used = tol;

  const ComplexMatrix choi = choi_matrix(phi);
  const Spectrum sp = hermitian_eig(choi);
  props.cp = sp.eigenvalues.back() >= -tol;

  ComplexMatrix tp_sum(phi.n);
  ComplexMatrix unital_sum(phi.n);
  for (const KrausTerm& t : phi.terms) {
    ComplexMatrix vv = t.op.adjoint() * t.op;
    vv *= cplx(t.weight, 0.0);
    tp_sum += vv;
    ComplexMatrix ww = t.op * t.op.adjoint();
    ww *= cplx(t.weight, 0.0);
    unital_sum += ww;
  }
  const ComplexMatrix eye = ComplexMatrix::identity(phi.n);
  props.trace_preserving = max_abs_diff(tp_sum, eye) <= tol;
  props.unital = max_abs_diff(unital_sum, eye) <= tol;
  props.doubly_stochastic = props.cp && props.trace_preserving && props.unital;
  props.self_dual = max_abs_diff(choi, choi_matrix(dual_map(phi))) <= tol;
  return props;
}

KrausMap hermitian_kraus(const KrausMap& phi, double tol) {
  if (!map_properties(phi, tol).self_dual)
    throw InputError("hermitian_kraus: map is not self-dual");
  KrausMap out;
  out.n = phi.n;
  for (const KrausTerm& t : phi.terms) {
    ComplexMatrix k = 0.5 * (t.op + t.op.adjoint());
    ComplexMatrix l = t.op - t.op.adjoint();
    l *= cplx(0.0, -0.5);  // (V - V*)/(2i)
    if (k.max_abs() > 1e-12) out.terms.push_back({t.weight, std::move(k)});
    if (l.max_abs() > 1e-12) out.terms.push_back({t.weight, std::move(l)});
  }
  if (out.terms.empty()) throw InputError("hermitian_kraus: map has no nonzero operators");
  if (max_abs_diff(choi_matrix(out), choi_matrix(phi)) > tol)
    throw CapError("hermitian_kraus: Cartesian split failed the Choi identity check");
  return out;
}

RealMatrix delta_matrix(const KrausMap& phi) {
  validate_terms(phi.n, phi.terms);
  RealMatrix delta(phi.n);
  for (const KrausTerm& t : phi.terms)
    for (int i = 0; i < phi.n; ++i)
      for (int j = 0; j < phi.n; ++j) delta(i, j) += t.weight * std::norm(t.op(i, j));
  return delta;
}

KrausMap schur_map(const ComplexMatrix& c) {
  const int n = c.dim();
  if (max_abs_diff(c, c.adjoint()) > 1e-9)
    throw InputError("schur_map: C must be Hermitian");
  for (int i = 0; i < n; ++i)
    if (std::abs(c(i, i) - cplx(1.0, 0.0)) > 1e-9)
      throw InputError("schur_map: C must have unit diagonal");
  const Spectrum sp = hermitian_eig(c);
  if (sp.eigenvalues.back() < -1e-9)
    throw InputError("schur_map: C must be positive semidefinite");

  // Factor G = diag(sqrt(lambda)) V*, so G* G = C; the Kraus operators are
  // diagonals of the conjugated rows of G.
  KrausMap out;
  out.n = n;
  for (int k = 0; k < n; ++k) {
    const double lam = std::max(0.0, sp.eigenvalues[k]);
    const double root = std::sqrt(lam);
    double row_norm_sq = 0.0;
    ComplexMatrix d(n);
    for (int j = 0; j < n; ++j) {
      const cplx g = root * std::conj(sp.eigenvectors(j, k));
      d(j, j) = std::conj(g);
      row_norm_sq += std::norm(g);
    }
    if (std::sqrt(row_norm_sq) > 1e-12) out.terms.push_back({1.0, std::move(d)});
  }
  if (out.terms.empty()) throw InputError("schur_map: factorization produced no operators");
  return out;
}

ComplexMatrix extract_schur(const KrausMap& phi, double tol) {
  validate_terms(phi.n, phi.terms);
  const int n = phi.n;
  ComplexMatrix ones(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ones(i, j) = 1.0;
  const ComplexMatrix c = apply_map(phi, ones);

  // Phi must act as A -> C o A on every matrix unit, which in particular
  // forces Phi(D) = D on diagonals.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ComplexMatrix unit(n);
      unit(i, j) = 1.0;
      ComplexMatrix expected(n);
      expected(i, j) = c(i, j);
      if (max_abs_diff(apply_map(phi, unit), expected) > tol)
        throw InputError("extract_schur: map does not fix diagonal matrices / is not Schur");
    }
  return c;
}

KrausMap mixed_from_rank1(
    const std::vector<std::pair<double, std::vector<cplx>>>& decomposition) {
  if (decomposition.empty()) throw InputError("mixed_from_rank1: empty decomposition");
  const int n = static_cast<int>(decomposition.front().second.size());
  double total = 0.0;
  KrausMap out;
  out.n = n;
  for (const auto& [p, v] : decomposition) {
    if (!(p > 0.0)) throw InputError("mixed_from_rank1: weights must be positive");
    if (static_cast<int>(v.size()) != n)
      throw InputError("mixed_from_rank1: vector length mismatch");
    ComplexMatrix d(n);
    for (int i = 0; i < n; ++i) {
      if (std::abs(std::abs(v[i]) - 1.0) > 1e-9)
        throw InputError("mixed_from_rank1: vector entries must be unimodular");
      d(i, i) = v[i];
    }
    total += p;
    out.terms.push_back({p, std::move(d)});
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InputError("mixed_from_rank1: weights must sum to one");
  return out;
}

KrausMap conjugation_map(const ComplexMatrix& u) {
  if (max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.dim())) > kUnitaryTol)
    throw InputError("conjugation_map: matrix is not unitary");
  KrausMap out;
  out.n = u.dim();
  out.terms.push_back({1.0, u});
  return out;
}

KrausMap compose(const KrausMap& outer, const KrausMap& inner) {
  if (outer.n != inner.n) throw InputError("compose: dimension mismatch");
  KrausMap out;
  out.n = outer.n;
  out.terms.reserve(outer.terms.size() * inner.terms.size());
  for (const KrausTerm& a : outer.terms)
    for (const KrausTerm& b : inner.terms)
      out.terms.push_back({a.weight * b.weight, a.op * b.op});
  return out;
}

KrausMap tensor_with_identity(const KrausMap& phi, int q) {
  if (q < 1) throw InputError("tensor_with_identity: q must be >= 1");
  const ComplexMatrix eye = ComplexMatrix::identity(q);
  KrausMap out;
  out.n = phi.n * q;
  out.terms.reserve(phi.terms.size());
  for (const KrausTerm& t : phi.terms) out.terms.push_back({t.weight, kron(t.op, eye)});
  return out;
}

KrausMap mix_maps(const std::vector<double>& weights, const std::vector<KrausMap>& maps) {
  if (weights.size() != maps.size() || maps.empty())
    throw InputError("mix_maps: weights and maps must pair up");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw InputError("mix_maps: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InputError("mix_maps: weights must sum to one");
  const int n = maps.front().n;
  KrausMap out;
  out.n = n;
  for (std::size_t m = 0; m < maps.size(); ++m) {
    if (maps[m].n != n) throw InputError("mix_maps: dimension mismatch");
    for (const KrausTerm& t : maps[m].terms) out.terms.push_back({weights[m] * t.weight, t.op});
  }
  return out;
}

KrausMap xi_map(int n, const ComplexMatrix& u) {
  if (u.dim() != n) throw InputError("xi_map: dimension mismatch");
  if (max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(n)) > kUnitaryTol)
    throw InputError("xi_map: matrix is not unitary");
  // Gamma_{U*} o (Schur by I) o Gamma_U has Kraus operators U* E_ii U.
  KrausMap out;
  out.n = n;
  for (int i = 0; i < n; ++i) {
    ComplexMatrix op(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) op(a, b) = std::conj(u(i, a)) * u(i, b);
    out.terms.push_back({1.0, std::move(op)});
  }
  return out;
}

KrausMap to_kraus_map(const MixedHermitianUnitary& m) {
  KrausMap out;
  out.n = m.n;
  out.terms.reserve(m.terms.size());
  for (const auto& [p, hu] : m.terms) out.terms.push_back({p, hu.matrix});
  return out;
}

std::optional<MixedHermitianUnitary> as_mixed_hermitian_unitary(const KrausMap& phi,
                                                                double tol) {
  double total = 0.0;
  MixedHermitianUnitary out;
  out.n = phi.n;
  for (const KrausTerm& t : phi.terms) {
    const StructureFlags f = classify(t.op, tol);
    if (!f.hermitian_unitary) return std::nullopt;
    total += t.weight;
    out.terms.emplace_back(t.weight, make_hermitian_unitary(t.op));
  }
  if (std::abs(total - 1.0) > 1e-9) return std::nullopt;
  return out;
}

Prop4Report proposition4_pipeline(int m, int q, double rho) {
  if (m < 3 || m % 2 == 0) throw InputError("proposition4_pipeline: m must be odd and >= 3");
  if (q < 1) throw InputError("proposition4_pipeline: q must be >= 1");
  if (!(rho > 0.0 && rho <= 1.0)) throw InputError("proposition4_pipeline: rho must be in (0,1]");
  const int n = m * q;
  if (n > 12) throw CapError("proposition4_pipeline: n = m*q exceeds the LP cap of 12");

  Prop4Report report;
  report.m = m;
  report.q = q;
  report.n = n;
  report.rho = rho;

  // The extreme point with q Katz blocks of size m, and its shrink target.
  const RealMatrix big_m = kron(katz_block(m).matrix(), RealMatrix::identity(q));
  const RealMatrix w_n = flat_matrix(n).matrix();
  RealMatrix target = big_m;
  target *= rho;
  {
    RealMatrix rest = w_n;
    rest *= (1.0 - rho);
    target += rest;
  }

  // C = q (C_m tensor W_q) is a rank-two correlation matrix; B = rho C + (1-rho) I.
  RealMatrix corr = kron(cosine_correlation(m).matrix(), flat_matrix(q).matrix());
  corr *= static_cast<double>(q);
  for (int i = 0; i < n; ++i)
    if (std::abs(corr(i, i) - 1.0) > 1e-12)
      throw CapError("proposition4_pipeline: constructed correlation lost its unit diagonal");
  RealMatrix shrunk = corr;
  shrunk *= rho;
  {
    RealMatrix eye = RealMatrix::identity(n);
    eye *= (1.0 - rho);
    shrunk += eye;
  }

  auto dist = cut_membership(RealCorrelationMatrix(shrunk), 1e-9);
  if (!dist) {
    report.lp_feasible = false;
    return report;
  }
  report.lp_feasible = true;
  report.distribution = dist;

  // Psi = Gamma_{U*} o Phi_B o Gamma_U with U = F_m tensor F_q: each sign
  // diagonal S becomes the Hermitian unitary U* S U.
  const ComplexMatrix u = kron(fourier_matrix(m), fourier_matrix(q));
  const ComplexMatrix u_adj = u.adjoint();
  MixedHermitianUnitary psi;
  psi.n = n;
  double max_defect = 0.0;
  for (const auto& [signs, w] : dist->weights) {
    ComplexMatrix s(n);
    for (int i = 0; i < n; ++i) s(i, i) = static_cast<double>(sign_at(signs, i));
    const ComplexMatrix op = u_adj * s * u;
    max_defect = std::max(max_defect, max_abs_diff(op, op.adjoint()));
    max_defect = std::max(
        max_defect, max_abs_diff(op * op.adjoint(), ComplexMatrix::identity(n)));
    if (!classify(op, 1e-9).hermitian_unitary)
      throw CapError("proposition4_pipeline: conjugated sign diagonal is not Hermitian unitary");
    psi.terms.emplace_back(w, make_hermitian_unitary(op, "U*diag(" + signs + ")U"));
  }
  report.max_hermitian_unitary_defect = max_defect;

  const RealMatrix delta = delta_matrix(to_kraus_map(psi));
  report.delta_residual = max_abs_diff(delta, target);
  report.psi = std::move(psi);

  // Column-shift identity of the Schur map on Fourier projectors:
  // Phi_{C_m}(v_p v_p*) = (v_{p-1} v_{p-1}* + v_{p+1} v_{p+1}*)/2.
  const ComplexMatrix fm = fourier_matrix(m);
  const ComplexMatrix cm = cosine_correlation(m).matrix().to_complex();
  double shift_residual = 0.0;
  for (int p = 0; p < m; ++p) {
    auto projector = [&](int col) {
      const int cc = ((col % m) + m) % m;
      ComplexMatrix out(m);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) out(a, b) = fm(a, cc) * std::conj(fm(b, cc));
      return out;
    };
    const ComplexMatrix lhs = schur_product(cm, projector(p));
    ComplexMatrix rhs = projector(p - 1) + projector(p + 1);
    rhs *= cplx(0.5, 0.0);
    shift_residual = std::max(shift_residual, max_abs_diff(lhs, rhs));
  }
  report.shift_identity_residual = shift_residual;
  return report;
}

MixedHermitianUnitary symmetrized_unitary_2x2(const ComplexMatrix& u) {
  if (u.dim() != 2) throw InputError("symmetrized_unitary_2x2: matrix must be 2x2");
  if (max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(2)) > kUnitaryTol)
    throw InputError("symmetrized_unitary_2x2: matrix is not unitary");

  // Spectral decomposition of the normal matrix U = V diag(l1, l2) V*.
  const cplx tr = u.trace();
  const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const cplx disc = std::sqrt(tr * tr - 4.0 * det);
  const cplx l1 = 0.5 * (tr + disc);

  cplx v0, v1;
  const cplx cand_a0 = u(0, 1), cand_a1 = l1 - u(0, 0);
  const cplx cand_b0 = l1 - u(1, 1), cand_b1 = u(1, 0);
  const double na = std::norm(cand_a0) + std::norm(cand_a1);
  const double nb = std::norm(cand_b0) + std::norm(cand_b1);
  if (std::max(na, nb) < 1e-20) {
    v0 = 1.0;  // scalar matrix: any basis diagonalizes
    v1 = 0.0;
  } else if (na >= nb) {
    const double s = 1.0 / std::sqrt(na);
    v0 = cand_a0 * s;
    v1 = cand_a1 * s;
  } else {
    const double s = 1.0 / std::sqrt(nb);
    v0 = cand_b0 * s;
    v1 = cand_b1 * s;
  }
  // Forced orthonormal complement; its Rayleigh quotient is the second
  // eigenvalue because U is normal.
  const cplx w0 = -std::conj(v1), w1 = std::conj(v0);
  const cplx lam1 = std::conj(v0) * (u(0, 0) * v0 + u(0, 1) * v1) +
                    std::conj(v1) * (u(1, 0) * v0 + u(1, 1) * v1);
  const cplx lam2 = std::conj(w0) * (u(0, 0) * w0 + u(0, 1) * w1) +
                    std::conj(w1) * (u(1, 0) * w0 + u(1, 1) * w1);

  const double c = std::clamp((lam1 * std::conj(lam2)).real(), -1.0, 1.0);
  const double p = 0.5 * (1.0 + c);

  ComplexMatrix r(2);
  r(0, 0) = std::norm(v0) - std::norm(w0);
  r(0, 1) = v0 * std::conj(v1) - w0 * std::conj(w1);
  r(1, 0) = std::conj(r(0, 1));
  r(1, 1) = std::norm(v1) - std::norm(w1);

  MixedHermitianUnitary out;
  out.n = 2;
  if (p > 1e-12)
    out.terms.emplace_back(p, make_hermitian_unitary(ComplexMatrix::identity(2), "I"));
  if (1.0 - p > 1e-12)
    out.terms.emplace_back(1.0 - p, make_hermitian_unitary(std::move(r), "reflection"));

  // Self-check against the target map (Gamma_U + Gamma_{U*})/2.
  KrausMap half;
  half.n = 2;
  half.terms.push_back({0.5, u});
  half.terms.push_back({0.5, u.adjoint()});
  if (max_abs_diff(choi_matrix(to_kraus_map(out)), choi_matrix(half)) > 1e-10)
    throw CapError("symmetrized_unitary_2x2: decomposition failed the Choi identity check");
  return out;
}

}  // namespace bistoch
