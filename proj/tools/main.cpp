// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: every subcommand prints a machine-readable JSON
// report to stdout and a human summary to stderr. Exit codes: 0 all claims
// pass, 1 a claim failed, 2 invalid input, 3 a resource cap was hit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bistoch/json_io.hpp"
#include "bistoch/report.hpp"

namespace {

using bistoch::CapError;
using bistoch::InputError;

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BISTOCH_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw InputError("BISTOCH_SEED is not a valid unsigned integer");
    }
  }
  return 20240801u;
}

int emit(const bistoch::report::json& rep) {
  std::cout << rep.dump(2) << std::endl;
  std::cerr << bistoch::report::human_summary(rep);
  return bistoch::report::exit_code_for(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bistoch: symmetric bistochastic geometry, rank-one correlation hulls, "
               "and self-dual channel decompositions"};
  app.require_subcommand(1);

  auto* lambda3 = app.add_subcommand("verify-lambda3", "replay the 3x3 two-thirds threshold");
  auto* lambda4 = app.add_subcommand("verify-lambda4", "replay the 4x4 two-thirds threshold");

  std::string input_path;
  std::optional<double> shrink;
  double tol = 1e-9;
  auto* cut = app.add_subcommand("cut-membership",
                                 "decide rank-one correlation hull membership");
  cut->add_option("--input", input_path, "correlation matrix JSON file")->required();
  double shrink_value = -1.0;
  auto* shrink_opt = cut->add_option("--shrink", shrink_value, "test t*C + (1-t)*I instead");
  cut->add_option("--tol", tol, "LP feasibility tolerance");

  int n = 3;
  std::string partition_spec = "3";
  long samples = 64;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double resolution = 1e-3;
  auto* est = app.add_subcommand("estimate-lambda", "bracket the segment constant for a Katz point");
  est->add_option("--n", n, "dimension (<= 8)")->required();
  est->add_option("--partition", partition_spec, "comma-separated Katz parts, e.g. 3,1");
  est->add_option("--samples", samples, "random Hermitian-unitary generators");
  est->add_option("--seed", seed, "RNG seed (falls back to BISTOCH_SEED)")
      ->each([&](const std::string&) { seed_given = true; });
  est->add_option("--resolution", resolution, "bisection grid step (>= 1e-6)");

  int pm = 3, pq = 1;
  double rho = 0.5;
  auto* pipe = app.add_subcommand("pipeline", "block extreme point to mixed Hermitian unitary map");
  pipe->add_option("--m", pm, "odd Katz block size >= 3")->required();
  pipe->add_option("--q", pq, "number of blocks")->required();
  pipe->add_option("--rho", rho, "shrink factor in (0,1]; 0.5 is always certifiable");

  std::string map_path;
  auto* selfdual = app.add_subcommand("selfdual-check", "properties and Hermitian Kraus form");
  selfdual->add_option("--input", map_path, "Kraus map JSON file")->required();
  selfdual->add_option("--tol", tol, "property tolerance");

  std::string unitary_path;
  auto* dec = app.add_subcommand("decompose-2x2", "symmetrize a 2x2 unitary conjugation");
  dec->add_option("--input", unitary_path, "2x2 unitary matrix JSON file")->required();

  int cn = 3;
  long csamples = 48;
  double cresolution = 1e-3;
  auto* conj = app.add_subcommand("conjecture", "compare lambda and rho brackets (estimates only)");
  conj->add_option("--n", cn, "dimension (<= 6)")->required();
  conj->add_option("--samples", csamples, "random generators per bracket");
  conj->add_option("--seed", seed, "RNG seed (falls back to BISTOCH_SEED)")
      ->each([&](const std::string&) { seed_given = true; });
  conj->add_option("--resolution", cresolution, "bisection grid step");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!seed_given) seed = default_seed();

    if (lambda3->parsed()) return emit(bistoch::report::verify_lambda3());
    if (lambda4->parsed()) return emit(bistoch::report::verify_lambda4());
    if (cut->parsed()) {
      if (shrink_opt->count() > 0) shrink = shrink_value;
      const bistoch::RealCorrelationMatrix c(
          bistoch::real_matrix_from_json(load_json_file(input_path)));
      return emit(bistoch::report::cut_membership_report(c, shrink, tol));
    }
    if (est->parsed()) {
      std::vector<int> parts;
      std::string token;
      std::istringstream stream(partition_spec);
      while (std::getline(stream, token, ',')) {
        if (!token.empty()) parts.push_back(std::stoi(token));
      }
      const bistoch::KatzPartition partition(parts);
      return emit(bistoch::report::estimate_lambda_report(n, partition, samples, seed, resolution));
    }
    if (pipe->parsed()) return emit(bistoch::report::pipeline_report(pm, pq, rho));
    if (selfdual->parsed()) {
      const bistoch::KrausMap phi = bistoch::kraus_map_from_json(load_json_file(map_path));
      return emit(bistoch::report::selfdual_check_report(phi, tol));
    }
    if (dec->parsed()) {
      const bistoch::ComplexMatrix u =
          bistoch::complex_matrix_from_json(load_json_file(unitary_path));
      return emit(bistoch::report::decompose_2x2_report(u));
    }
    if (conj->parsed())
      return emit(bistoch::report::conjecture_report(cn, csamples, seed, cresolution));
  } catch (const CapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
