#pragma once

// JSON forms of solutions, counters, verdicts and center sets. Big integers
// are decimal strings.

#include <json.hpp>

#include "ratiocycle/comparison.hpp"
#include "ratiocycle/hitting_set.hpp"
#include "ratiocycle/parametric.hpp"

namespace ratiocycle {

nlohmann::json to_json(const Counters& c);
Counters counters_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatioSolution& s);
/// Inverse of to_json for the fields of the interchange format; throws
/// std::invalid_argument on malformed input.
RatioSolution solution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CenterSet& c);

/// Verdict of a concrete detection run. `gs_edges` is the edge count of the
/// original graph, so a violated super-source edge can be told apart.
nlohmann::json verdict_to_json(const NegCycleVerdict<Rational>& v, std::size_t original_edges);

}  // namespace ratiocycle
