#include "spider/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spider {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  vertices_ = std::move(vertices);
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = i;
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex '" + e.u + "'");
    }
    if (e.weight < 1) {
      throw std::invalid_argument("edge " + e.u + "-" + e.v +
                                  ": weight must be a positive integer");
    }
    if (!index_.count(e.u) || !index_.count(e.v)) {
      throw std::invalid_argument("edge " + e.u + "-" + e.v +
                                  ": unknown endpoint");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    auto key = std::make_pair(e.u, e.v);
    auto it = weight_.find(key);
    if (it != weight_.end()) {
      if (it->second != e.weight) {
        throw std::invalid_argument("edge " + e.u + "-" + e.v +
                                    ": duplicate with conflicting weight");
      }
      continue;  // identical duplicate, e.g. a symmetrized DIMACS arc
    }
    weight_[key] = e.weight;
  }
  for (const auto& [key, w] : weight_) {
    edges_.push_back(Edge{key.first, key.second, w});
    adjacency_[key.first].push_back({key.second, w});
    adjacency_[key.second].push_back({key.first, w});
  }
  for (auto& [v, list] : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_vertex(const std::string& v) const { return index_.count(v); }

std::size_t Graph::vertex_index(const std::string& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown vertex '" + v + "'");
  }
  return it->second;
}

std::optional<int> Graph::edge_weight(const std::string& u,
                                      const std::string& v) const {
  auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  auto it = weight_.find(key);
  if (it == weight_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::pair<std::string, int>>& Graph::neighbors(
    const std::string& v) const {
  static const std::vector<std::pair<std::string, int>> empty;
  auto it = adjacency_.find(v);
  return it == adjacency_.end() ? empty : it->second;
}

std::uint64_t Graph::total_weight() const {
  std::uint64_t sum = 0;
  for (const auto& e : edges_) sum += static_cast<std::uint64_t>(e.weight);
  return sum;
}

GraphFormat graph_format_from_string(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "auto" || name == "autodetect") return GraphFormat::autodetect;
  throw std::invalid_argument("unknown graph format: " + name);
}

namespace {

int parse_weight(const std::string& token, int line) {
  try {
    std::size_t pos = 0;
    long w = std::stol(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    if (w < 1) throw ParseError(line, "weight must be a positive integer");
    return static_cast<int>(w);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed weight '" + token + "'");
  }
}

Graph parse_edgelist(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string u, v, w, extra;
    if (!(line >> u)) continue;  // blank
    if (!(line >> v >> w)) {
      throw ParseError(lineno, "expected 'u v w'");
    }
    if (line >> extra) {
      throw ParseError(lineno, "trailing token '" + extra + "'");
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex '" + u + "'");
    edges.push_back(Edge{u, v, parse_weight(w, lineno)});
    vertices.push_back(u);
    vertices.push_back(v);
  }
  try {
    return Graph(std::move(vertices), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

Graph parse_dimacs(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  long declared_n = -1, declared_m = -1;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream line(raw);
    std::string tag;
    if (!(line >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(line >> kind >> declared_n >> declared_m) || kind != "sp") {
        throw ParseError(lineno, "expected 'p sp <n> <m>'");
      }
      for (long i = 1; i <= declared_n; ++i) {
        vertices.push_back(std::to_string(i));
      }
      continue;
    }
    if (tag == "a") {
      if (declared_n < 0) {
        throw ParseError(lineno, "arc before problem line");
      }
      std::string u, v, w;
      if (!(line >> u >> v >> w)) {
        throw ParseError(lineno, "expected 'a u v w'");
      }
      if (u == v) throw ParseError(lineno, "self-loop at vertex '" + u + "'");
      edges.push_back(Edge{u, v, parse_weight(w, lineno)});
      continue;
    }
    throw ParseError(lineno, "unknown line tag '" + tag + "'");
  }
  if (declared_n < 0) throw ParseError(lineno, "missing problem line");
  try {
    return Graph(std::move(vertices), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::autodetect) {
    // DIMACS files start with 'c' or 'p' tag lines.
    std::istringstream in{std::string(text)};
    std::string tag;
    format = GraphFormat::edgelist;
    if (in >> tag && (tag == "p" || tag == "c")) {
      format = GraphFormat::dimacs;
    }
  }
  return format == GraphFormat::dimacs ? parse_dimacs(text)
                                       : parse_edgelist(text);
}

Graph load_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

}  // namespace spider
