#pragma once

#include <json.hpp>

#include "phasebox/fock.hpp"
#include "phasebox/genfun.hpp"
#include "phasebox/mpoly.hpp"
#include "phasebox/partition.hpp"
#include "phasebox/phase_model.hpp"

namespace phasebox {

using Json = nlohmann::ordered_json;

// MPoly: array of {"exps": {var: doubled exponent}, "num": "...", "den": "..."},
// terms in the graded term order; round-trips bit-exactly.
Json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j, VarTable& vt);

Json series_to_json(const Series& s);
Series series_from_json(const Json& j, VarTable& vt);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json plane_partition_to_json(const PlanePartition& p);
PlanePartition plane_partition_from_json(const Json& j);

Json uc_plane_partition_to_json(const UCPlanePartition& p);
UCPlanePartition uc_plane_partition_from_json(const Json& j);

Json phase_vector_to_json(const PhaseVector& v);
PhaseVector phase_vector_from_json(const Json& j, VarTable& vt);

Json fock_state_to_json(const FockState& s);
FockState fock_state_from_json(const Json& j);

Json fock_vector_to_json(const FockVector& v);

Json identity_report_to_json(const IdentityReport& r);

}  // namespace phasebox
