// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "bistoch/birkhoff.hpp"
#include "bistoch/cp_maps.hpp"
#include "bistoch/cut_polytope.hpp"
#include "bistoch/matrix.hpp"

namespace bistoch::report {

using json = nlohmann::ordered_json;

// Every command produces a RunReport json: {"command", "inputs", "results":
// [{"claim", "status": "pass"|"fail"|"bracket"|"info", ...values}],
// "certificates", "seed", "elapsed_ms"}. Each pass/fail carries the numeric
// slack or residual that justified it. JSON goes to stdout, the human summary
// to stderr; identical command+seed give byte-identical JSON except elapsed_ms.

json verify_lambda3(const ComplexMatrix* witness_override = nullptr);
json verify_lambda4(const ComplexMatrix* witness_override = nullptr);

json cut_membership_report(const RealCorrelationMatrix& c, std::optional<double> shrink,
                           double tol);

json estimate_lambda_report(int n, const KatzPartition& partition, long samples,
                            std::uint64_t seed, double resolution);

json pipeline_report(int m, int q, double rho);

json selfdual_check_report(const KrausMap& phi, double tol);

json decompose_2x2_report(const ComplexMatrix& u);

json conjecture_report(int n, long samples, std::uint64_t seed, double resolution);

/// 0 when every claim passed, 1 otherwise.
int exit_code_for(const json& report);

/// One line per result, for stderr.
std::string human_summary(const json& report);

}  // namespace bistoch::report
