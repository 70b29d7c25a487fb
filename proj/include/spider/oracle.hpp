#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spider/graph.hpp"

namespace spider::oracle {

// Classical baselines used as ground truth in tests. Nothing here shares
// propagation code with the engine.

struct OracleResult {
  std::optional<std::uint64_t> distance;  // empty when unreachable
  std::set<std::vector<std::string>> all_optimal_paths;
};

/// Dijkstra plus predecessor-DAG traversal for the full optimal-path set.
OracleResult oracle_shortest_path(const Graph& graph, const std::string& source,
                                  const std::string& destination);

/// Exhaustive simple-path enumeration; guarded at n <= 12.
std::vector<std::pair<std::vector<std::string>, std::uint64_t>>
oracle_simple_paths(const Graph& graph, const std::string& source,
                    const std::string& destination);

/// Exhaustive backtracking search; guarded at n <= 12. Returned cycle starts
/// and ends at the smallest vertex.
std::optional<std::vector<std::string>> oracle_hamiltonian(const Graph& graph);

/// Seeded Erdos-Renyi-style generator; with ensure_connected a random
/// spanning tree is seeded first.
Graph random_graph(std::size_t n, double edge_probability, int weight_min,
                   int weight_max, std::uint64_t seed,
                   bool ensure_connected = true);

}  // namespace spider::oracle
