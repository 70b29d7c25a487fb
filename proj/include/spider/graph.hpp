#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spider/types.hpp"

namespace spider {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line) {}
  int line;
};

struct Edge {
  std::string u;  // canonical: u < v
  std::string v;
  int weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted simple graph; vertex ids are arbitrary tokens, kept
/// in ascending order so downstream prime labels are deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& v) const;
  std::size_t vertex_index(const std::string& v) const;
  std::optional<int> edge_weight(const std::string& u,
                                 const std::string& v) const;
  const std::vector<std::pair<std::string, int>>& neighbors(
      const std::string& v) const;
  /// Sum of all edge weights; Sigma-w, the solver step budget base.
  std::uint64_t total_weight() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::string, std::string>, int> weight_;
  std::map<std::string, std::vector<std::pair<std::string, int>>> adjacency_;
};

enum class GraphFormat { edgelist, dimacs, autodetect };

GraphFormat graph_format_from_string(const std::string& name);

/// Edge-list lines "u v w" ('#' comments) or DIMACS shortest-path format;
/// DIMACS arcs are symmetrized into undirected edges.
Graph parse_graph(std::string_view text,
                  GraphFormat format = GraphFormat::autodetect);

Graph load_graph(const std::string& path,
                 GraphFormat format = GraphFormat::autodetect);

}  // namespace spider
