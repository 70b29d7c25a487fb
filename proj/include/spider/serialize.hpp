#pragma once

#include <string>

#include <json.hpp>

#include "spider/engine.hpp"
#include "spider/solvers.hpp"

namespace spider {

// Snapshot schema (spider-snapshot-v1):
//   mode: "none" | "bfs" | "enumerate"
//   step: integer
//   relays: [{id, behavior:{kind[,gain][,prime]}, state:{...}?}]
//   arrays: [{id, from, to, length, cells:[[signal id,...],...]}]
//   signals: [{id, amplitude (decimal string), parent, birth_step,
//              birth_site, entry_step, entry_cell}]
// Serialization is canonical (sorted keys), so equal states give equal bytes.

nlohmann::json snapshot(const Engine& engine);
Engine restore_engine(const nlohmann::json& snap);

nlohmann::json event_to_json(const TraceEvent& event);

/// JSON-lines trace: one object {"step": t, "events": [...]} per step,
/// t = 0 (injections) through the current step.
std::string trace_to_jsonl(const Engine& engine);

nlohmann::json to_json(const PathResult& result, const SolverStats& stats);
nlohmann::json to_json(const CycleResult& result, const SolverStats& stats);
nlohmann::json to_json(const std::vector<WeightedPath>& paths,
                       const SolverStats& stats);

}  // namespace spider
