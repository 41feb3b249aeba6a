// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "bistoch/birkhoff.hpp"
#include "bistoch/cp_maps.hpp"
#include "bistoch/cut_polytope.hpp"
#include "bistoch/lp.hpp"
#include "bistoch/matrix.hpp"

namespace bistoch {

// Matrix wire format used repo-wide: {"n": int, "entries": [[re, im], ...]}
// row-major; real matrices may carry plain numbers instead of pairs.

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
nlohmann::ordered_json matrix_to_json(const RealMatrix& m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json& j);
RealMatrix real_matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json partition_to_json(const KatzPartition& p);
KatzPartition partition_from_json(const nlohmann::json& j);

nlohmann::ordered_json kraus_map_to_json(const KrausMap& m);
KrausMap kraus_map_from_json(const nlohmann::json& j);

nlohmann::ordered_json mixed_hermitian_unitary_to_json(const MixedHermitianUnitary& m);

nlohmann::ordered_json cut_distribution_to_json(const CutDistribution& d);
CutDistribution cut_distribution_from_json(const nlohmann::json& j);

nlohmann::ordered_json bgp_to_json(const BGPCertificate& f);
BGPCertificate bgp_from_json(const nlohmann::json& j);

nlohmann::ordered_json feasibility_problem_to_json(const FeasibilityProblem& p);

}  // namespace bistoch
