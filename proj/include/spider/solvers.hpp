#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spider/engine.hpp"
#include "spider/graph.hpp"
#include "spider/overlay.hpp"

namespace spider {

struct PathResult {
  std::uint64_t distance = 0;  // equals arrival_step by the timing contract
  std::vector<std::string> vertices;  // ordered source -> destination
  std::set<std::string> vertex_set;   // factorization plus destination
  BigInt arrival_amplitude = 1;
  Step arrival_step = 0;
};

struct CycleResult {
  std::vector<std::string> vertices;  // starts and ends at the start vertex
  std::uint64_t total_weight = 0;
  Step arrival_step = 0;
};

struct SolverStats {
  Step steps_executed = 0;
  std::uint64_t signals_created = 0;
};

struct SolverOptions {
  std::optional<Step> budget;  // default: total edge weight + 1
  OverlayMode mode = OverlayMode::bfs;  // shortest_path only
  bool keep_engine = false;  // retain the engine for trace export / replay
};

struct ShortestPathOutcome {
  std::optional<PathResult> result;
  SolverStats stats;
  HaltReason halt = HaltReason::step_budget;
  std::optional<Engine> engine;
};

struct CycleOutcome {
  std::optional<CycleResult> result;
  SolverStats stats;
  HaltReason halt = HaltReason::step_budget;
  std::optional<Engine> engine;
};

using WeightedPath = std::pair<std::vector<std::string>, std::uint64_t>;

struct EnumerateOutcome {
  std::vector<WeightedPath> paths;  // in nondecreasing weight order
  SolverStats stats;
  std::optional<Engine> engine;
};

/// Walk the lineage of a terminating signal back to its injected root; birth
/// sites in reverse order plus the terminal vertex give the ordered path.
std::vector<std::string> recover_path_order(const Engine& engine,
                                            SignalId terminal,
                                            const Overlay& overlay,
                                            const std::string& terminal_vertex);

ShortestPathOutcome shortest_path(const Graph& graph, const std::string& source,
                                  const std::string& destination,
                                  const SolverOptions& options = {});

CycleOutcome hamiltonian_cycle(const Graph& graph, const std::string& start,
                               const SolverOptions& options = {});

EnumerateOutcome enumerate_paths(const Graph& graph, const std::string& source,
                                 const std::string& destination,
                                 Step step_budget,
                                 const SolverOptions& options = {});

}  // namespace spider
