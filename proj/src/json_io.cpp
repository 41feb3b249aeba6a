// SPDX-License-Identifier: Apache-2.0
#include "bistoch/json_io.hpp"

#include <string>

namespace bistoch {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

cplx entry_from_json(const json& e) {
  if (e.is_number()) return cplx(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return cplx(e[0].get<double>(), e[1].get<double>());
  throw InputError("matrix entry must be a number or an [re, im] pair");
}

int dim_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw InputError("matrix JSON must be an object with \"n\" and \"entries\"");
  const int n = j.at("n").get<int>();
  if (n < 1) throw InputError("matrix JSON: n must be positive");
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n)
    throw InputError("matrix JSON: entries must hold n*n values in row-major order");
  return n;
}

}  // namespace

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json j;
  j["n"] = m.dim();
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int k = 0; k < m.dim(); ++k)
      entries.push_back({m(i, k).real(), m(i, k).imag()});
  j["entries"] = std::move(entries);
  return j;
}

ordered_json matrix_to_json(const RealMatrix& m) {
  ordered_json j;
  j["n"] = m.dim();
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int k = 0; k < m.dim(); ++k) entries.push_back(m(i, k));
  j["entries"] = std::move(entries);
  return j;
}

ComplexMatrix complex_matrix_from_json(const json& j) {
  const int n = dim_from_json(j);
  std::vector<cplx> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& e : j.at("entries")) entries.push_back(entry_from_json(e));
  return ComplexMatrix(n, std::move(entries));
}

RealMatrix real_matrix_from_json(const json& j) {
  const int n = dim_from_json(j);
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& e : j.at("entries")) {
    const cplx z = entry_from_json(e);
    if (z.imag() != 0.0) throw InputError("matrix JSON: expected a real matrix");
    entries.push_back(z.real());
  }
  return RealMatrix(n, std::move(entries));
}

ordered_json partition_to_json(const KatzPartition& p) {
  ordered_json j;
  j["parts"] = p.parts();
  return j;
}

KatzPartition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("parts") || !j.at("parts").is_array())
    throw InputError("partition JSON must be an object with a \"parts\" array");
  std::vector<int> parts;
  for (const auto& e : j.at("parts")) parts.push_back(e.get<int>());
  return KatzPartition(std::move(parts));
}

ordered_json kraus_map_to_json(const KrausMap& m) {
  ordered_json j;
  j["n"] = m.n;
  ordered_json terms = ordered_json::array();
  for (const KrausTerm& t : m.terms) {
    ordered_json term;
    term["w"] = t.weight;
    term["op"] = matrix_to_json(t.op);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

KrausMap kraus_map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw InputError("Kraus map JSON must be an object with \"n\" and \"terms\"");
  const int n = j.at("n").get<int>();
  std::vector<KrausTerm> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("op")) throw InputError("Kraus term JSON must contain \"op\"");
    const double w = t.contains("w") ? t.at("w").get<double>() : 1.0;
    terms.push_back({w, complex_matrix_from_json(t.at("op"))});
  }
  return make_kraus_map(n, std::move(terms));
}

ordered_json mixed_hermitian_unitary_to_json(const MixedHermitianUnitary& m) {
  ordered_json j;
  j["n"] = m.n;
  ordered_json terms = ordered_json::array();
  for (const auto& [p, hu] : m.terms) {
    ordered_json term;
    term["w"] = p;
    term["op"] = matrix_to_json(hu.matrix);
    term["signature"] = hu.signature;
    if (!hu.label.empty()) term["label"] = hu.label;
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

ordered_json cut_distribution_to_json(const CutDistribution& d) {
  ordered_json j;
  j["n"] = d.n;
  ordered_json weights = ordered_json::array();
  for (const auto& [signs, w] : d.weights) {
    ordered_json entry;
    entry["signs"] = signs;
    entry["w"] = w;
    weights.push_back(std::move(entry));
  }
  j["weights"] = std::move(weights);
  return j;
}

CutDistribution cut_distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("weights"))
    throw InputError("distribution JSON must be an object with \"n\" and \"weights\"");
  CutDistribution d;
  d.n = j.at("n").get<int>();
  if (d.n < 1) throw InputError("distribution JSON: n must be positive");
  for (const auto& e : j.at("weights")) {
    const std::string signs = e.at("signs").get<std::string>();
    const double w = e.at("w").get<double>();
    if (static_cast<int>(signs.size()) != d.n || signs[0] != '+')
      throw InputError("distribution JSON: sign strings must be canonical, length n");
    for (char ch : signs)
      if (ch != '+' && ch != '-') throw InputError("distribution JSON: bad sign character");
    if (!(w >= 0.0)) throw InputError("distribution JSON: weights must be nonnegative");
    d.weights.emplace_back(signs, w);
  }
  return d;
}

ordered_json bgp_to_json(const BGPCertificate& f) {
  ordered_json j;
  j["n"] = f.n;
  j["f"] = f.f;
  return j;
}

BGPCertificate bgp_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("f"))
    throw InputError("certificate JSON must be an object with \"n\" and \"f\"");
  BGPCertificate f;
  f.n = j.at("n").get<int>();
  for (const auto& e : j.at("f")) f.f.push_back(e.get<double>());
  if (f.n < 1 || f.f.size() != (static_cast<std::size_t>(1) << f.n))
    throw InputError("certificate JSON: f must hold 2^n values in binary-counter order");
  return f;
}

ordered_json feasibility_problem_to_json(const FeasibilityProblem& p) {
  ordered_json j;
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < p.num_eq; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < p.num_vars; ++c) row.push_back(p.e(r, c));
    rows.push_back(std::move(row));
  }
  j["E"] = std::move(rows);
  j["b"] = p.b;
  return j;
}

}  // namespace bistoch
