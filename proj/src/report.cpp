// SPDX-License-Identifier: Apache-2.0
#include "bistoch/report.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "bistoch/hull.hpp"
#include "bistoch/json_io.hpp"
#include "bistoch/lp.hpp"

namespace bistoch::report {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

json claim(const std::string& name, bool ok, const std::string& value_key, double value) {
  json c;
  c["claim"] = name;
  c["status"] = ok ? "pass" : "fail";
  c[value_key] = value;
  return c;
}

json info(const std::string& name, const json& value) {
  json c;
  c["claim"] = name;
  c["status"] = "info";
  c["value"] = value;
  return c;
}

/// |u_ij|^2 without a unitarity gate, so tampered witnesses produce a failing
/// residual instead of an exception.
RealMatrix squared_moduli(const ComplexMatrix& u) {
  RealMatrix r(u.dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < u.dim(); ++j) r(i, j) = std::norm(u(i, j));
  return r;
}

ComplexMatrix witness3_matrix() {
  const double a = -1.0 / 3.0, b = 2.0 / 3.0;
  return RealMatrix(3, {a, b, b, b, a, b, b, b, a}).to_complex();
}

double structure_defect(const ComplexMatrix& u) {
  const double herm = max_abs_diff(u, u.adjoint());
  const double unit = max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.dim()));
  return std::max(herm, unit);
}

double min_condition_slack(const BistochasticMatrix& a) {
  double worst = 1.0;
  bool any = false;
  for (const NecessaryCondition& c : necessary_conditions(a)) {
    worst = any ? std::min(worst, c.slack) : c.slack;
    any = true;
  }
  return any ? worst : 1.0;
}

}  // namespace

json verify_lambda3(const ComplexMatrix* witness_override) {
  const auto start = Clock::now();
  json rep;
  rep["command"] = "verify-lambda3";
  rep["inputs"] = json::object();
  json results = json::array();

  const ComplexMatrix u = witness_override ? *witness_override : witness3_matrix();
  const BistochasticMatrix b3 = katz_block(3);
  const BistochasticMatrix segment = segment_point(b3, 2.0 / 3.0);

  const double defect = structure_defect(u);
  results.push_back(claim("witness_hermitian_unitary", defect <= 1e-10, "defect", defect));

  const double image_residual = max_abs_diff(squared_moduli(u), segment.matrix());
  results.push_back(
      claim("witness_image_equals_segment", image_residual <= 1e-12, "residual", image_residual));

  const double boundary_slack = segment.matrix().trace() - 1.0 / 3.0;
  results.push_back(claim("trace_bound_boundary_slack_zero", std::abs(boundary_slack) <= 1e-12,
                          "slack", boundary_slack));

  const double beyond = 2.0 / 3.0 + 1e-6;
  const double beyond_slack = segment_point(b3, beyond).matrix().trace() - 1.0 / 3.0;
  results.push_back(claim("trace_bound_rejects_beyond", beyond_slack < 0.0, "slack", beyond_slack));

  const double b3_slack = b3.matrix().trace() - 1.0 / 3.0;
  results.push_back(claim("katz_point_outside", b3_slack < 0.0, "slack", b3_slack));

  rep["results"] = std::move(results);
  json certs;
  certs["witness"] = matrix_to_json(u);
  certs["segment_point"] = matrix_to_json(segment.matrix());
  rep["certificates"] = std::move(certs);
  rep["seed"] = 0;
  rep["elapsed_ms"] = elapsed_ms(start);
  return rep;
}

json verify_lambda4(const ComplexMatrix* witness_override) {
  const auto start = Clock::now();
  json rep;
  rep["command"] = "verify-lambda4";
  rep["inputs"] = json::object();
  json results = json::array();

  const KatzPartition shape({3, 1});
  const BistochasticMatrix m = katz_extreme_point(shape, Permutation::identity(4));
  const BistochasticMatrix segment = segment_point(m, 2.0 / 3.0);

  const std::vector<HullWitness> witnesses = paper_witnesses(4);
  const HullWitness& x = witnesses[0];
  const HullWitness& y = witnesses[1];

  RealMatrix mean(4);
  for (const auto& [w, hu] : x.decomposition) {
    RealMatrix img = squared_moduli(hu.matrix);
    img *= w;
    mean += img;
  }
  const double x_residual = max_abs_diff(mean, x.point.matrix());
  results.push_back(claim("x_equals_mean_of_involutions", x_residual <= 1e-12, "residual",
                          x_residual));

  // Y's single witness, with the 3x3 block replaceable by the tamper hook.
  ComplexMatrix uy(4);
  {
    const ComplexMatrix u3 = witness_override ? *witness_override : witness3_matrix();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) uy(i, j) = u3(i, j);
    uy(3, 3) = 1.0;
  }
  const double y_residual = max_abs_diff(squared_moduli(uy), y.point.matrix());
  results.push_back(claim("y_equals_witness_image", y_residual <= 1e-12, "residual", y_residual));

  RealMatrix combo = x.point.matrix();
  combo *= 0.25;
  {
    RealMatrix ypart = y.point.matrix();
    ypart *= 0.75;
    combo += ypart;
  }
  const double combo_residual = max_abs_diff(combo, segment.matrix());
  results.push_back(claim("quarter_x_plus_three_quarters_y_equals_segment",
                          combo_residual <= 1e-12, "residual", combo_residual));

  const double boundary_slack = min_condition_slack(segment);
  results.push_back(claim("diag_functional_boundary_slack_zero",
                          std::abs(boundary_slack) <= 1e-12, "slack", boundary_slack));

  const double beyond_slack = min_condition_slack(segment_point(m, 2.0 / 3.0 + 1e-6));
  results.push_back(
      claim("diag_functional_rejects_beyond", beyond_slack < 0.0, "slack", beyond_slack));

  const double m_slack = min_condition_slack(m);
  results.push_back(claim("katz_point_outside", m_slack < 0.0, "slack", m_slack));

  rep["results"] = std::move(results);
  json certs;
  certs["X"] = matrix_to_json(x.point.matrix());
  certs["Y"] = matrix_to_json(y.point.matrix());
  certs["Y_witness"] = matrix_to_json(uy);
  rep["certificates"] = std::move(certs);
  rep["seed"] = 0;
  rep["elapsed_ms"] = elapsed_ms(start);
  return rep;
}

json cut_membership_report(const RealCorrelationMatrix& c, std::optional<double> shrink,
                           double tol) {
  const auto start = Clock::now();
  json rep;
  rep["command"] = "cut-membership";
  json inputs;
  inputs["n"] = c.dim();
  if (shrink) inputs["shrink"] = *shrink;
  inputs["tol"] = tol;
  rep["inputs"] = std::move(inputs);

  RealMatrix target = c.matrix();
  if (shrink) {
    if (!(*shrink >= 0.0 && *shrink <= 1.0))
      throw InputError("cut-membership: shrink must lie in [0,1]");
    target *= *shrink;
    RealMatrix eye = RealMatrix::identity(c.dim());
    eye *= (1.0 - *shrink);
    target += eye;
  }
  const RealCorrelationMatrix shrunk(target);

  json results = json::array();
  json certs = json::object();
  const auto dist = cut_membership(shrunk, tol);
  results.push_back(info("membership_decision", dist ? "feasible" : "infeasible"));
  if (dist) {
    double total = 0.0;
    for (const auto& [signs, w] : dist->weights) total += w;
    results.push_back(claim("certificate_weights_sum_one", std::abs(total - 1.0) <= 10 * tol,
                            "error", std::abs(total - 1.0)));
    const double moment_residual = max_abs_diff(distribution_moments(*dist), shrunk.matrix());
    results.push_back(claim("certificate_moments_match", moment_residual <= 10 * tol, "residual",
                            moment_residual));
    const BGPCertificate f = bgp_from_distribution(*dist);
    const BgpCheck check = check_bgp(f, shrunk, 10 * tol);
    results.push_back(claim("certificate_walsh_verifies", check.ok, "walsh_min", check.walsh_min));
    certs["distribution"] = cut_distribution_to_json(*dist);
    certs["bgp"] = bgp_to_json(f);
  }
  rep["results"] = std::move(results);
  rep["certificates"] = std::move(certs);
  rep["seed"] = 0;
  rep["elapsed_ms"] = elapsed_ms(start);
  return rep;
}

json estimate_lambda_report(int n, const KatzPartition& partition, long samples,
                            std::uint64_t seed, double resolution) {
  const auto start = Clock::now();
  if (n > 8) throw CapError("estimate-lambda: n is capped at 8");
  if (partition.total() != n)
    throw InputError("estimate-lambda: partition does not sum to n");

  json rep;
  rep["command"] = "estimate-lambda";
  json inputs;
  inputs["n"] = n;
  inputs["partition"] = partition.parts();
  inputs["samples"] = samples;
  inputs["resolution"] = resolution;
  rep["inputs"] = std::move(inputs);

  const BistochasticMatrix m = katz_extreme_point(partition, Permutation::identity(n));
  const LambdaBracket bracket = estimate_lambda(n, m, samples, seed, resolution);

  json results = json::array();
  json b;
  b["claim"] = "lambda_bracket";
  b["status"] = "bracket";
  b["lower"] = bracket.lower;
  b["upper"] = bracket.upper;
  results.push_back(std::move(b));
  results.push_back(claim("bracket_ordered", bracket.lower <= bracket.upper + 1e-12, "gap",
                          bracket.upper - bracket.lower));
  if (n == 3 || n == 4) {
    const bool contains = bracket.lower <= 2.0 / 3.0 + 1e-12 && bracket.upper >= 2.0 / 3.0 - 1e-12;
    results.push_back(claim("bracket_contains_two_thirds", contains, "lower", bracket.lower));
  }
  if (n <= 2)
    results.push_back(claim("bracket_is_exactly_one",
                            bracket.lower == 1.0 && bracket.upper == 1.0, "lower", bracket.lower));

  // Replayable inside-certificate at the certified lower endpoint.
  json certs;
  {
    const auto gens = lambda_generator_set(n, samples, seed);
    const MembershipVerdict verdict =
        sampled_hull_membership(segment_point(m, bracket.lower), gens);
    json weights = json::array();
    for (const auto& [idx, w] : verdict.weights) {
      json entry;
      entry["generator"] = gens[idx].label;
      entry["signature"] = gens[idx].signature;
      entry["w"] = w;
      weights.push_back(std::move(entry));
    }
    json v;
    v["status"] = verdict.status == Membership::Inside
                      ? "inside"
                      : (verdict.status == Membership::Outside ? "outside" : "unknown");
    v["weights"] = std::move(weights);
    v["detail"] = verdict.detail;
    certs["lower_certificate"] = std::move(v);
    results.push_back(claim("lower_certificate_inside",
                            verdict.status == Membership::Inside, "k", bracket.lower));
  }
  certs["tested_point"] = matrix_to_json(m.matrix());
  rep["results"] = std::move(results);
  rep["certificates"] = std::move(certs);
  rep["seed"] = seed;
  rep["elapsed_ms"] = elapsed_ms(start);
  return rep;
}

json pipeline_report(int m, int q, double rho) {
  const auto start = Clock::now();
  json rep;
  rep["command"] = "pipeline";
  json inputs;
  inputs["m"] = m;
  inputs["q"] = q;
  inputs["rho"] = rho;
  rep["inputs"] = std::move(inputs);

  const Prop4Report result = proposition4_pipeline(m, q, rho);
  json results = json::array();
  results.push_back(info("cut_lp", result.lp_feasible ? "feasible" : "infeasible_rho"));
  json certs = json::object();
  if (result.lp_feasible) {
    results.push_back(claim("kraus_terms_hermitian_unitary",
                            result.max_hermitian_unitary_defect <= 1e-9, "defect",
                            result.max_hermitian_unitary_defect));
    results.push_back(
        claim("delta_identity", result.delta_residual <= 1e-8, "residual", result.delta_residual));
    results.push_back(claim("schur_column_shift_identity",
                            result.shift_identity_residual <= 1e-10, "residual",
                            result.shift_identity_residual));
    certs["distribution"] = cut_distribution_to_json(*result.distribution);
    certs["psi"] = mixed_hermitian_unitary_to_json(*result.psi);
  }
  rep["results"] = std::move(results);
  rep["certificates"] = std::move(certs);
  rep["seed"] = 0;
  rep["elapsed_ms"] = elapsed_ms(start);
  return rep;
}

json selfdual_check_report(const KrausMap& phi, double tol) {
  const auto start = Clock::now();
  json rep;
  rep["command"] = "selfdual-check";
  json inputs;
  inputs["n"] = phi.n;
  inputs["terms"] = phi.terms.size();
  inputs["tol"] = tol;
  rep["inputs"] = std::move(inputs);

  json results = json::array();
  json certs = json::object();

  const MapProperties props = map_properties(phi, tol);
  json p;
  p["cp"] = props.cp;
  p["trace_preserving"] = props.trace_preserving;
  p["unital"] = props.unital;
  p["doubly_stochastic"] = props.doubly_stochastic;
  p["self_dual"] = props.self_dual;
  results.push_back(info("map_properties", std::move(p)));

  if (props.self_dual) {
    const KrausMap herm = hermitian_kraus(phi, tol);
    double herm_defect = 0.0;
    for (const KrausTerm& t : herm.terms)
      herm_defect = std::max(herm_defect, max_abs_diff(t.op, t.op.adjoint()));
    results.push_back(
        claim("hermitian_kraus_operators_hermitian", herm_defect <= 1e-10, "defect", herm_defect));
    const double choi_residual = max_abs_diff(choi_matrix(herm), choi_matrix(phi));
    results.push_back(
        claim("hermitian_kraus_choi_equal", choi_residual <= 1e-10, "residual", choi_residual));
    certs["hermitian_kraus_terms"] = herm.terms.size();

    // When the map is a Schur multiplier with a real matrix, the rank-one LP
    // decides mixed Hermitian unitarity exactly.
    try {
      const ComplexMatrix c = extract_schur(phi, 1e-8);
      certs["schur_matrix"] = matrix_to_json(c);
      if (max_imag_abs(c) <= tol) {
        const RealCorrelationMatrix real_c(real_part(c));
        const auto dist = cut_membership(real_c, 1e-9);
        results.push_back(
            info("mixed_hermitian_unitary", dist ? "yes_certified" : "impossible_by_cut_lp"));
        if (dist) certs["distribution"] = cut_distribution_to_json(*dist);
      } else {
        results.push_back(info("mixed_hermitian_unitary", "schur_matrix_not_real"));
      }
    } catch (const InputError&) {
      results.push_back(info("mixed_hermitian_unitary", "not_a_schur_map"));
    }
  }

  rep["results"] = std::move(results);
  rep["certificates"] = std::move(certs);
  rep["seed"] = 0;
  rep["elapsed_ms"] = elapsed_ms(start);
  return rep;
}

json decompose_2x2_report(const ComplexMatrix& u) {
  const auto start = Clock::now();
  json rep;
  rep["command"] = "decompose-2x2";
  rep["inputs"] = json::object({{"n", u.dim()}});

  const MixedHermitianUnitary mhu = symmetrized_unitary_2x2(u);

  KrausMap half;
  half.n = 2;
  half.terms.push_back({0.5, u});
  half.terms.push_back({0.5, u.adjoint()});
  const double residual = max_abs_diff(choi_matrix(to_kraus_map(mhu)), choi_matrix(half));

  double defect = 0.0;
  for (const auto& [w, hu] : mhu.terms) defect = std::max(defect, structure_defect(hu.matrix));

  json results = json::array();
  results.push_back(claim("choi_equals_symmetrized_map", residual <= 1e-10, "residual", residual));
  results.push_back(claim("terms_hermitian_unitary", defect <= 1e-10, "defect", defect));
  results.push_back(info("term_count", mhu.terms.size()));

  json certs;
  certs["decomposition"] = mixed_hermitian_unitary_to_json(mhu);
  rep["results"] = std::move(results);
  rep["certificates"] = std::move(certs);
  rep["seed"] = 0;
  rep["elapsed_ms"] = elapsed_ms(start);
  return rep;
}

json conjecture_report(int n, long samples, std::uint64_t seed, double resolution) {
  const auto start = Clock::now();
  if (n < 1 || n > 6) throw CapError("conjecture: n is capped at 6 for the comparison run");
  json rep;
  rep["command"] = "conjecture";
  json inputs;
  inputs["n"] = n;
  inputs["samples"] = samples;
  inputs["resolution"] = resolution;
  rep["inputs"] = std::move(inputs);

  json results = json::array();

  // Lambda side: bracket every Katz partition type; the minimum of the uppers
  // bounds the dimension constant from above.
  double lambda_upper = 1.0;
  double lambda_tested_lower = 1.0;
  json per_partition = json::array();
  for (const KatzPartition& part : katz_partitions(n)) {
    const BistochasticMatrix m = katz_extreme_point(part, Permutation::identity(n));
    const LambdaBracket b = estimate_lambda(n, m, samples, seed, resolution);
    json e;
    e["partition"] = part.parts();
    e["lower"] = b.lower;
    e["upper"] = b.upper;
    per_partition.push_back(std::move(e));
    lambda_upper = std::min(lambda_upper, b.upper);
    lambda_tested_lower = std::min(lambda_tested_lower, b.lower);
  }
  json lam;
  lam["upper_bound"] = lambda_upper;
  lam["tested_lower_estimate"] = lambda_tested_lower;
  lam["per_partition"] = std::move(per_partition);
  results.push_back(info("lambda_bracket_estimates", std::move(lam)));

  // Rho side at rank cap two: constructive 1/2 floor, best tested matrix
  // above, clamped by the analytic 2/3 bound for n >= 3.
  RhoEstimate rho;
  rho.n = n;
  rho.rank_cap = 2;
  rho.lower = 0.5;
  rho.upper = 1.0;
  json tested = json::array();
  if (n >= 3) {
    std::vector<std::pair<std::string, RealCorrelationMatrix>> cases;
    cases.emplace_back("cosine_ring", cosine_correlation(n));
    for (int m = 3; m <= n; m += 2)
      if (n % m == 0) {
        const int q = n / m;
        RealMatrix c = kron(cosine_correlation(m).matrix(), flat_matrix(q).matrix());
        c *= static_cast<double>(q);
        cases.emplace_back("block_cosine_m=" + std::to_string(m), RealCorrelationMatrix(c));
      }
    for (const auto& [name, c] : cases) {
      const RhoResult r = rho_bisection(c, resolution);
      json e;
      e["matrix"] = name;
      e["t_max"] = r.t_max;
      tested.push_back(std::move(e));
      rho.upper = std::min(rho.upper, r.t_max + resolution);
    }
    rho.upper = std::min(rho.upper, 2.0 / 3.0);
  } else {
    rho.lower = 1.0;
  }
  json rj;
  rj["rank_cap"] = rho.rank_cap;
  rj["lower"] = rho.lower;
  rj["upper"] = rho.upper;
  rj["tested"] = std::move(tested);
  results.push_back(info("rho_bracket_estimates", std::move(rj)));

  results.push_back(info("note",
                         "brackets are estimates on tested points; equality of the two "
                         "constants is conjectural and not asserted"));

  rep["results"] = std::move(results);
  rep["certificates"] = json::object();
  rep["seed"] = seed;
  rep["elapsed_ms"] = elapsed_ms(start);
  return rep;
}

int exit_code_for(const json& rep) {
  for (const auto& r : rep.at("results"))
    if (r.at("status") == "fail") return 1;
  return 0;
}

std::string human_summary(const json& rep) {
  std::ostringstream out;
  out << rep.at("command").get<std::string>() << ":\n";
  for (const auto& r : rep.at("results")) {
    out << "  " << r.at("claim").get<std::string>() << ": "
        << r.at("status").get<std::string>();
    for (const auto& [key, value] : r.items())
      if (key != "claim" && key != "status") out << " " << key << "=" << value.dump();
    out << "\n";
  }
  return out.str();
}

}  // namespace bistoch::report
