#pragma once

#include <random>
#include <vector>

#include "spider/engine.hpp"
#include "spider/graph.hpp"

namespace spider::testutil {

/// Random network of linear reflecting relays (bounce / negate / amplify)
/// over paired arrays: a random tree plus an occasional extra edge.
inline Topology random_linear_network(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> relay_count(2, 5);
  std::uniform_int_distribution<int> length(1, 4);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> gain(1, 3);
  Topology t;
  int n = relay_count(rng);
  for (int i = 0; i < n; ++i) {
    Behavior b;
    switch (kind(rng)) {
      case 0: b = Behavior::bounce(); break;
      case 1: b = Behavior::negate(); break;
      default: {
        int k = gain(rng);
        b = Behavior::amplify(rng() % 2 ? k : -k);
        break;
      }
    }
    t.relays.push_back({static_cast<RelayId>(i), b});
  }
  ArrayId next = 0;
  auto add_pair = [&](RelayId a, RelayId b, int len) {
    t.arrays.push_back({next++, a, b, len});
    t.arrays.push_back({next++, b, a, len});
  };
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    add_pair(static_cast<RelayId>(i), static_cast<RelayId>(parent(rng)),
             length(rng));
  }
  if (n >= 3 && rng() % 2) {
    add_pair(0, static_cast<RelayId>(n - 1), length(rng));
  }
  return t;
}

struct Site {
  ArrayId array;
  int cell;
};

inline Site random_site(const Topology& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, t.arrays.size() - 1);
  const auto& arr = t.arrays[pick(rng)];
  std::uniform_int_distribution<int> cell(1, arr.length);
  return {arr.id, cell(rng)};
}

inline std::vector<Frame> run_frames(Engine& engine, Step steps) {
  std::vector<Frame> frames;
  frames.push_back(engine.occupancy());
  for (Step t = 0; t < steps; ++t) {
    engine.step();
    frames.push_back(engine.occupancy());
  }
  return frames;
}

inline bool has_collision(const Engine& engine) {
  for (const auto& ev : engine.trace()) {
    if (ev.kind == EventKind::collision_tiebreak) return true;
  }
  return false;
}

/// Cellwise union of two occupancy frames.
inline Frame merge_frames(const Frame& a, const Frame& b) {
  Frame out = a;
  for (const auto& [array, cells] : b) {
    auto& dst = out[array];
    if (dst.empty()) dst.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (const auto& amp : cells[i]) dst[i].push_back(amp);
      std::sort(dst[i].begin(), dst[i].end());
    }
  }
  return out;
}

inline Frame scale_frame(const Frame& f, const BigInt& k) {
  Frame out = f;
  for (auto& [array, cells] : out) {
    for (auto& cell : cells) {
      for (auto& amp : cell) amp *= k;
      std::sort(cell.begin(), cell.end());
    }
  }
  return out;
}

/// Petersen graph with unit weights (famously non-Hamiltonian).
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  auto name = [](int i) { return "p" + std::to_string(i); };
  for (int i = 0; i < 5; ++i) {
    edges.push_back({name(i), name((i + 1) % 5), 1});
    edges.push_back({name(i), name(i + 5), 1});
    edges.push_back({name(5 + i), name(5 + (i + 2) % 5), 1});
  }
  std::vector<std::string> names;
  for (int i = 0; i < 10; ++i) names.push_back(name(i));
  return Graph(std::move(names), std::move(edges));
}

}  // namespace spider::testutil
