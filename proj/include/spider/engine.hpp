#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spider/behavior.hpp"
#include "spider/types.hpp"

namespace spider {

enum class EventKind {
  inject,
  shift,
  incident,
  emit,
  filtered,
  annihilated,
  collision_tiebreak,
  arrival,
};

const char* to_string(EventKind kind);

struct TraceEvent {
  Step step = 0;
  EventKind kind = EventKind::shift;
  std::vector<SignalId> signals;
  std::vector<BigInt> amplitudes;
  std::int64_t relay = -1;  // site relay, -1 when not applicable
  std::int64_t array = -1;
  int cell = 0;
};

struct Signal {
  SignalId id = 0;
  BigInt amplitude;
  std::optional<SignalId> parent;
  Step birth_step = 0;
  RelayId birth_site = 0;  // injection array's from-relay for roots
  // Transport bookkeeping for the unit-speed assertion.
  Step entry_step = 0;
  int entry_cell = 1;
};

struct DirectedArray {
  ArrayId id = 0;
  RelayId from = 0;
  RelayId to = 0;
  int length = 1;
  // cells[i] holds the signals at 1-based position i+1; more than one entry
  // only under CollisionPolicy::process_all.
  std::vector<std::vector<SignalId>> cells;
  std::optional<ArrayId> reverse;  // equal-length opposite array, if any
};

struct RelayNode {
  RelayId id = 0;
  Behavior behavior;
  std::vector<ArrayId> incoming;
  std::vector<ArrayId> outgoing;
  PrimeVertexState state;
};

struct RelaySpec {
  RelayId id;
  Behavior behavior;
};

struct ArraySpec {
  ArrayId id;
  RelayId from;
  RelayId to;
  int length;
};

struct Topology {
  std::vector<RelaySpec> relays;
  std::vector<ArraySpec> arrays;
};

/// Vertex-side policy for prime_vertex relays.
enum class OverlayMode {
  none,       // non-graph network
  bfs,        // absorb repeat arrivals at visited relays
  enumerate_all,  // full propagation, no vertex-side absorption
};

OverlayMode overlay_mode_from_string(const std::string& name);
const char* to_string(OverlayMode mode);

/// What to do when several signals are incident on one relay in one step.
enum class CollisionPolicy {
  tiebreak,     // keep the (|amplitude|, id)-smallest signal, drop the rest
  process_all,  // apply the behavior to every incident signal
};

enum class HaltReason { predicate, step_budget, quiescent };

const char* to_string(HaltReason reason);

struct RunOutcome {
  Step steps = 0;
  HaltReason reason = HaltReason::step_budget;
};

/// Per-step occupancy: array id -> amplitude lists per cell. Signal identity
/// is deliberately erased so periodic states compare equal.
using Frame = std::map<ArrayId, std::vector<std::vector<BigInt>>>;

/// The synchronous stepper. Each step runs three phases: collect signals in
/// last cells as incident, shift everything else forward one cell, then let
/// each relay with incidences emit children into first cells.
class Engine {
 public:
  explicit Engine(const Topology& topology,
                  OverlayMode mode = OverlayMode::none);

  /// Place a fresh root signal; only legal before the first step.
  SignalId inject(ArrayId array, int cell, BigInt amplitude);

  /// Advance global time by one; returns this step's trace events.
  std::vector<TraceEvent> step();

  RunOutcome run_until(const std::function<bool(const Engine&)>& halt,
                       Step max_steps);

  Step current_step() const { return step_; }
  std::size_t live_signal_count() const { return live_; }
  OverlayMode mode() const { return mode_; }
  CollisionPolicy collision_policy() const { return policy_; }

  const Signal& signal(SignalId id) const;
  const std::vector<Signal>& signals() const { return signals_; }
  const std::vector<RelayNode>& relays() const { return relays_; }
  const std::vector<DirectedArray>& arrays() const { return arrays_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }

  const RelayNode& relay(RelayId id) const;
  RelayNode& relay_mut(RelayId id);
  const DirectedArray& array(ArrayId id) const;

  Frame occupancy() const;

  /// Snapshot/restore support: raw state installation, validated.
  struct RawState {
    Topology topology;
    OverlayMode mode = OverlayMode::none;
    Step step = 0;
    std::vector<Signal> signals;
    std::vector<std::pair<ArrayId, std::vector<std::vector<SignalId>>>> cells;
    std::vector<std::pair<RelayId, PrimeVertexState>> relay_states;
  };
  static Engine from_state(const RawState& state);

 private:
  Engine() = default;

  void build(const Topology& topology);
  std::size_t relay_index(RelayId id) const;
  std::size_t array_index(ArrayId id) const;
  SignalId new_signal(BigInt amplitude, std::optional<SignalId> parent,
                      Step birth_step, RelayId birth_site);
  void emit_child(RelayNode& relay, SignalId parent, BigInt amplitude,
                  ArrayId target, Step now, std::vector<TraceEvent>& events);
  void apply_behavior(RelayNode& relay, SignalId incident, ArrayId via,
                      Step now, std::vector<TraceEvent>& events);
  void apply_prime_vertex(RelayNode& relay, SignalId incident, ArrayId via,
                          Step now, std::vector<TraceEvent>& events);

  OverlayMode mode_ = OverlayMode::none;
  CollisionPolicy policy_ = CollisionPolicy::tiebreak;
  Step step_ = 0;
  std::size_t live_ = 0;
  std::vector<RelayNode> relays_;
  std::vector<DirectedArray> arrays_;
  std::vector<Signal> signals_;
  std::vector<TraceEvent> trace_;
  std::unordered_map<RelayId, std::size_t> relay_idx_;
  std::unordered_map<ArrayId, std::size_t> array_idx_;
};

}  // namespace spider
