#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "cubeconf/complex.hpp"
#include "cubeconf/graph.hpp"
#include "cubeconf/planner.hpp"
#include "cubeconf/topology.hpp"

namespace cubeconf {

/// Insertion-ordered so output bytes are stable for identical inputs.
using Json = nlohmann::ordered_json;

std::string_view mode_name(Mode mode);
std::string_view field_name(Field field);

Json sufficiency_json(const Graph& g, const SufficiencyReport& report);

/// Debug dump: mode, n, f_vector, cells by factor names, signed faces keyed
/// by "dim:index" cell ids.
Json complex_json(const CubeComplex& c);

Json topology_json(const TopologyReport& report);

Json plan_json(const Graph& g, const Plan& p, std::string_view graph_label);

/// Inverse of plan_json; names are resolved against g.
Plan plan_from_json(const Graph& g, const Json& j);

Json duality_json(const DualityReport& report);

}  // namespace cubeconf
