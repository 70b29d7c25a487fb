#include "spider/solvers.hpp"

#include <algorithm>
#include <stdexcept>

namespace spider {

namespace {

void require_vertex(const Graph& graph, const std::string& v,
                    const char* role) {
  if (!graph.has_vertex(v)) {
    throw std::invalid_argument(std::string(role) + " vertex '" + v +
                                "' not in graph");
  }
}

void inject_probe(Engine& engine, const Overlay& overlay,
                  const std::string& source) {
  BigInt amp = overlay.labeling.prime(source);
  for (ArrayId a : overlay.arrays_from(source)) {
    engine.inject(a, 1, amp);
  }
}

}  // namespace

std::vector<std::string> recover_path_order(
    const Engine& engine, SignalId terminal, const Overlay& overlay,
    const std::string& terminal_vertex) {
  std::vector<std::string> path;
  std::optional<SignalId> cursor = terminal;
  while (cursor) {
    const Signal& s = engine.signal(*cursor);
    path.push_back(overlay.vertex(s.birth_site));
    if (s.parent && engine.signal(*s.parent).birth_step >= s.birth_step) {
      throw std::logic_error("recover_path_order: broken lineage");
    }
    cursor = s.parent;
  }
  std::reverse(path.begin(), path.end());
  path.push_back(terminal_vertex);
  return path;
}

ShortestPathOutcome shortest_path(const Graph& graph, const std::string& source,
                                  const std::string& destination,
                                  const SolverOptions& options) {
  require_vertex(graph, source, "source");
  require_vertex(graph, destination, "destination");
  ShortestPathOutcome outcome;
  if (source == destination) {
    PathResult r;
    r.distance = 0;
    r.vertices = {source};
    r.vertex_set = {source};
    r.arrival_amplitude = assign_primes(graph).prime(source);
    r.arrival_step = 0;
    outcome.result = std::move(r);
    outcome.halt = HaltReason::predicate;
    return outcome;
  }
  auto labeling = assign_primes(graph);
  auto overlay = build_overlay(graph, labeling);
  Engine engine(overlay.topology, options.mode);
  RelayId dest_relay = overlay.relay(destination);
  engine.relay_mut(dest_relay).state.is_destination = true;
  inject_probe(engine, overlay, source);
  Step budget = options.budget.value_or(graph.total_weight() + 1);
  auto run = engine.run_until(
      [dest_relay](const Engine& e) {
        return !e.relay(dest_relay).state.arrivals.empty();
      },
      budget);
  outcome.stats = {run.steps, engine.signals().size()};
  outcome.halt = run.reason;
  if (run.reason == HaltReason::predicate) {
    const Arrival& arrival = engine.relay(dest_relay).state.arrivals.front();
    PathResult r;
    r.distance = arrival.step;
    r.arrival_step = arrival.step;
    r.arrival_amplitude = arrival.amplitude;
    r.vertices =
        recover_path_order(engine, arrival.signal, overlay, destination);
    r.vertex_set = factor_amplitude(arrival.amplitude, labeling);
    r.vertex_set.insert(destination);
    outcome.result = std::move(r);
  }
  if (options.keep_engine) outcome.engine = std::move(engine);
  return outcome;
}

CycleOutcome hamiltonian_cycle(const Graph& graph, const std::string& start,
                               const SolverOptions& options) {
  require_vertex(graph, start, "start");
  if (graph.vertices().size() < 3) {
    throw std::invalid_argument(
        "hamiltonian_cycle: graph must have at least 3 vertices");
  }
  auto labeling = assign_primes(graph);
  auto overlay = build_overlay(graph, labeling);
  Engine engine(overlay.topology, OverlayMode::enumerate_all);
  RelayId home = overlay.relay(start);
  auto& home_state = engine.relay_mut(home).state;
  home_state.cycle_home = true;
  home_state.cycle_target = labeling.full_product();
  inject_probe(engine, overlay, start);
  Step budget = options.budget.value_or(graph.total_weight() + 1);
  auto run = engine.run_until(
      [home](const Engine& e) {
        return !e.relay(home).state.arrivals.empty();
      },
      budget);
  CycleOutcome outcome;
  outcome.stats = {run.steps, engine.signals().size()};
  outcome.halt = run.reason;
  if (run.reason == HaltReason::predicate) {
    const Arrival& arrival = engine.relay(home).state.arrivals.front();
    CycleResult r;
    r.vertices = recover_path_order(engine, arrival.signal, overlay, start);
    r.total_weight = arrival.step;
    r.arrival_step = arrival.step;
    outcome.result = std::move(r);
  }
  if (options.keep_engine) outcome.engine = std::move(engine);
  return outcome;
}

EnumerateOutcome enumerate_paths(const Graph& graph, const std::string& source,
                                 const std::string& destination,
                                 Step step_budget,
                                 const SolverOptions& options) {
  require_vertex(graph, source, "source");
  require_vertex(graph, destination, "destination");
  EnumerateOutcome outcome;
  if (source == destination) {
    outcome.paths.push_back({{source}, 0});
    return outcome;
  }
  auto labeling = assign_primes(graph);
  auto overlay = build_overlay(graph, labeling);
  Engine engine(overlay.topology, OverlayMode::enumerate_all);
  RelayId dest_relay = overlay.relay(destination);
  engine.relay_mut(dest_relay).state.is_destination = true;
  inject_probe(engine, overlay, source);
  auto run = engine.run_until([](const Engine&) { return false; }, step_budget);
  outcome.stats = {run.steps, engine.signals().size()};
  for (const Arrival& arrival : engine.relay(dest_relay).state.arrivals) {
    outcome.paths.push_back(
        {recover_path_order(engine, arrival.signal, overlay, destination),
         arrival.step});
  }
  if (options.keep_engine) outcome.engine = std::move(engine);
  return outcome;
}

}  // namespace spider
