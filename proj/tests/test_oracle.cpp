#include <doctest.h>

#include "spider/oracle.hpp"

using namespace spider;
using namespace spider::oracle;

namespace {
Graph triangle() { return parse_graph("A B 1\nB C 1\nA C 3\n"); }
}  // namespace

TEST_CASE("oracle_shortest_path: triangle") {
  auto r = oracle_shortest_path(triangle(), "A", "C");
  REQUIRE(r.distance.has_value());
  CHECK(*r.distance == 2);
  CHECK(r.all_optimal_paths ==
        std::set<std::vector<std::string>>{{"A", "B", "C"}});
}

TEST_CASE("oracle_shortest_path: source equals destination") {
  auto r = oracle_shortest_path(triangle(), "A", "A");
  REQUIRE(r.distance.has_value());
  CHECK(*r.distance == 0);
  CHECK(r.all_optimal_paths == std::set<std::vector<std::string>>{{"A"}});
}

TEST_CASE("oracle_shortest_path: unreachable is empty") {
  auto r = oracle_shortest_path(parse_graph("A B 1\nC D 2\n"), "A", "C");
  CHECK(!r.distance.has_value());
  CHECK(r.all_optimal_paths.empty());
}

TEST_CASE("oracle_simple_paths: triangle and K4") {
  auto paths = oracle_simple_paths(triangle(), "A", "C");
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].second == 2);  // sorted by weight
  CHECK(paths[1].second == 3);
  Graph k4 = parse_graph("A B 1\nA C 1\nA D 1\nB C 1\nB D 1\nC D 1\n");
  CHECK(oracle_simple_paths(k4, "A", "B").size() == 5);
}

TEST_CASE("oracle_simple_paths: size guard") {
  std::vector<std::string> names;
  for (int i = 0; i < 13; ++i) names.push_back("x" + std::to_string(i));
  Graph g(names, {});
  CHECK_THROWS_AS(oracle_simple_paths(g, "x0", "x1"), std::invalid_argument);
}

TEST_CASE("oracle_hamiltonian: K5, star and Petersen") {
  Graph k5 = random_graph(5, 1.0, 1, 1, 1);
  CHECK(oracle_hamiltonian(k5).has_value());
  Graph star = parse_graph("c a 1\nc b 1\nc d 1\nc e 1\nc f 1\n",
                           GraphFormat::edgelist);
  CHECK(!oracle_hamiltonian(star).has_value());
}

TEST_CASE("random_graph: seeded determinism") {
  Graph a = random_graph(20, 0.3, 1, 10, 42);
  Graph b = random_graph(20, 0.3, 1, 10, 42);
  CHECK(a.vertices() == b.vertices());
  CHECK(a.edges() == b.edges());
  Graph c = random_graph(20, 0.3, 1, 10, 43);
  CHECK(a.edges() != c.edges());
}

TEST_CASE("random_graph: connectivity flag makes all pairs reachable") {
  Graph g = random_graph(30, 0.05, 1, 10, 5, true);
  for (const auto& v : g.vertices()) {
    auto r = oracle_shortest_path(g, g.vertices().front(), v);
    CHECK(r.distance.has_value());
  }
}

TEST_CASE("oracle cross-check: min simple path weight equals distance") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_graph(7, 0.5, 1, 5, seed);
    auto paths =
        oracle_simple_paths(g, g.vertices().front(), g.vertices().back());
    auto sp =
        oracle_shortest_path(g, g.vertices().front(), g.vertices().back());
    REQUIRE(sp.distance.has_value());
    REQUIRE(!paths.empty());
    CHECK(paths.front().second == *sp.distance);
  }
}
