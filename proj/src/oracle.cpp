#include "spider/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>

namespace spider::oracle {

namespace {

constexpr std::size_t kExhaustiveGuard = 12;

void check_guard(const Graph& graph, const char* what) {
  if (graph.vertices().size() > kExhaustiveGuard) {
    throw std::invalid_argument(std::string(what) + ": graph too large (n=" +
                                std::to_string(graph.vertices().size()) +
                                ", guard " + std::to_string(kExhaustiveGuard) +
                                ")");
  }
}

}  // namespace

OracleResult oracle_shortest_path(const Graph& graph, const std::string& source,
                                  const std::string& destination) {
  graph.vertex_index(source);
  graph.vertex_index(destination);
  constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
  std::map<std::string, std::uint64_t> dist;
  for (const auto& v : graph.vertices()) dist[v] = inf;
  dist[source] = 0;
  using Item = std::pair<std::uint64_t, std::string>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, w] : graph.neighbors(u)) {
      std::uint64_t nd = d + static_cast<std::uint64_t>(w);
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.push({nd, v});
      }
    }
  }
  OracleResult result;
  if (dist[destination] == inf) return result;
  result.distance = dist[destination];
  // Every optimal path, walked backward over tight edges.
  std::vector<std::string> suffix{destination};
  auto backtrack = [&](auto&& self, const std::string& v) -> void {
    if (v == source) {
      std::vector<std::string> path(suffix.rbegin(), suffix.rend());
      result.all_optimal_paths.insert(std::move(path));
      return;
    }
    for (const auto& [u, w] : graph.neighbors(v)) {
      if (dist[u] + static_cast<std::uint64_t>(w) == dist[v]) {
        suffix.push_back(u);
        self(self, u);
        suffix.pop_back();
      }
    }
  };
  backtrack(backtrack, destination);
  return result;
}

std::vector<std::pair<std::vector<std::string>, std::uint64_t>>
oracle_simple_paths(const Graph& graph, const std::string& source,
                    const std::string& destination) {
  check_guard(graph, "oracle_simple_paths");
  graph.vertex_index(source);
  graph.vertex_index(destination);
  std::vector<std::pair<std::vector<std::string>, std::uint64_t>> found;
  if (source == destination) {
    found.push_back({{source}, 0});
    return found;
  }
  std::vector<std::string> path{source};
  std::set<std::string> on_path{source};
  auto dfs = [&](auto&& self, const std::string& u,
                 std::uint64_t weight) -> void {
    for (const auto& [v, w] : graph.neighbors(u)) {
      if (on_path.count(v)) continue;
      path.push_back(v);
      std::uint64_t nw = weight + static_cast<std::uint64_t>(w);
      if (v == destination) {
        found.push_back({path, nw});
      } else {
        on_path.insert(v);
        self(self, v, nw);
        on_path.erase(v);
      }
      path.pop_back();
    }
  };
  dfs(dfs, source, 0);
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return found;
}

std::optional<std::vector<std::string>> oracle_hamiltonian(const Graph& graph) {
  check_guard(graph, "oracle_hamiltonian");
  const auto& vertices = graph.vertices();
  if (vertices.size() < 3) return std::nullopt;
  const std::string& start = vertices.front();
  std::vector<std::string> path{start};
  std::set<std::string> on_path{start};
  std::optional<std::vector<std::string>> cycle;
  auto dfs = [&](auto&& self, const std::string& u) -> bool {
    if (path.size() == vertices.size()) {
      if (graph.edge_weight(u, start)) {
        auto full = path;
        full.push_back(start);
        cycle = std::move(full);
        return true;
      }
      return false;
    }
    for (const auto& [v, w] : graph.neighbors(u)) {
      if (on_path.count(v)) continue;
      path.push_back(v);
      on_path.insert(v);
      if (self(self, v)) return true;
      on_path.erase(v);
      path.pop_back();
    }
    return false;
  };
  dfs(dfs, start);
  return cycle;
}

Graph random_graph(std::size_t n, double edge_probability, int weight_min,
                   int weight_max, std::uint64_t seed, bool ensure_connected) {
  if (n < 1) throw std::invalid_argument("random_graph: n must be >= 1");
  if (weight_min < 1 || weight_max < weight_min) {
    throw std::invalid_argument("random_graph: bad weight range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(weight_min, weight_max);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int digits = static_cast<int>(std::to_string(n - 1 > 0 ? n - 1 : 1).size());
  auto name = [&](std::size_t i) {
    std::string s = std::to_string(i);
    return "v" + std::string(static_cast<std::size_t>(digits) - s.size(), '0') +
           s;
  };
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(name(i));
  std::set<std::pair<std::size_t, std::size_t>> chosen;
  if (ensure_connected && n > 1) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      std::size_t a = order[i], b = order[pick(rng)];
      chosen.insert({std::min(a, b), std::max(a, b)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) < edge_probability) chosen.insert({i, j});
    }
  }
  std::vector<Edge> edges;
  for (const auto& [i, j] : chosen) {
    edges.push_back(Edge{name(i), name(j), weight(rng)});
  }
  return Graph(std::move(vertices), std::move(edges));
}

}  // namespace spider::oracle
