#include "spider/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace spider {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::inject: return "inject";
    case EventKind::shift: return "shift";
    case EventKind::incident: return "incident";
    case EventKind::emit: return "emit";
    case EventKind::filtered: return "filtered";
    case EventKind::annihilated: return "annihilated";
    case EventKind::collision_tiebreak: return "collision_tiebreak";
    case EventKind::arrival: return "arrival";
  }
  return "?";
}

const char* to_string(OverlayMode mode) {
  switch (mode) {
    case OverlayMode::none: return "none";
    case OverlayMode::bfs: return "bfs";
    case OverlayMode::enumerate_all: return "enumerate";
  }
  return "?";
}

OverlayMode overlay_mode_from_string(const std::string& name) {
  if (name == "none") return OverlayMode::none;
  if (name == "bfs") return OverlayMode::bfs;
  if (name == "enumerate") return OverlayMode::enumerate_all;
  throw std::invalid_argument("unknown overlay mode: " + name);
}

const char* to_string(HaltReason reason) {
  switch (reason) {
    case HaltReason::predicate: return "predicate";
    case HaltReason::step_budget: return "step budget";
    case HaltReason::quiescent: return "quiescent";
  }
  return "?";
}

const char* to_string(BehaviorKind kind) {
  switch (kind) {
    case BehaviorKind::bounce: return "bounce";
    case BehaviorKind::negate: return "negate";
    case BehaviorKind::attenuate: return "attenuate";
    case BehaviorKind::amplify: return "amplify";
    case BehaviorKind::split: return "split";
    case BehaviorKind::prime_vertex: return "prime_vertex";
  }
  return "?";
}

BehaviorKind behavior_kind_from_string(const std::string& name) {
  if (name == "bounce") return BehaviorKind::bounce;
  if (name == "negate") return BehaviorKind::negate;
  if (name == "attenuate") return BehaviorKind::attenuate;
  if (name == "amplify") return BehaviorKind::amplify;
  if (name == "split") return BehaviorKind::split;
  if (name == "prime_vertex") return BehaviorKind::prime_vertex;
  throw std::invalid_argument("unknown behavior kind: " + name);
}

namespace {

bool needs_return_array(BehaviorKind kind) {
  switch (kind) {
    case BehaviorKind::bounce:
    case BehaviorKind::negate:
    case BehaviorKind::attenuate:
    case BehaviorKind::amplify:
      return true;
    default:
      return false;
  }
}

}  // namespace

Engine::Engine(const Topology& topology, OverlayMode mode) : mode_(mode) {
  policy_ = mode == OverlayMode::enumerate_all ? CollisionPolicy::process_all
                                               : CollisionPolicy::tiebreak;
  build(topology);
}

void Engine::build(const Topology& topology) {
  for (const auto& spec : topology.relays) {
    if (relay_idx_.count(spec.id)) {
      throw std::invalid_argument("duplicate relay id " +
                                  std::to_string(spec.id));
    }
    relay_idx_[spec.id] = relays_.size();
    relays_.push_back(RelayNode{spec.id, spec.behavior, {}, {}, {}});
  }
  for (const auto& spec : topology.arrays) {
    if (spec.length < 1) {
      throw std::invalid_argument("array " + std::to_string(spec.id) +
                                  ": length must be positive");
    }
    if (!relay_idx_.count(spec.from) || !relay_idx_.count(spec.to)) {
      throw std::invalid_argument("array " + std::to_string(spec.id) +
                                  ": endpoint references unknown relay");
    }
    if (array_idx_.count(spec.id)) {
      throw std::invalid_argument("duplicate array id " +
                                  std::to_string(spec.id));
    }
    array_idx_[spec.id] = arrays_.size();
    DirectedArray arr;
    arr.id = spec.id;
    arr.from = spec.from;
    arr.to = spec.to;
    arr.length = spec.length;
    arr.cells.assign(static_cast<std::size_t>(spec.length), {});
    arrays_.push_back(std::move(arr));
    relays_[relay_idx_[spec.from]].outgoing.push_back(spec.id);
    relays_[relay_idx_[spec.to]].incoming.push_back(spec.id);
  }
  std::sort(relays_.begin(), relays_.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(arrays_.begin(), arrays_.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  relay_idx_.clear();
  array_idx_.clear();
  for (std::size_t i = 0; i < relays_.size(); ++i) relay_idx_[relays_[i].id] = i;
  for (std::size_t i = 0; i < arrays_.size(); ++i) array_idx_[arrays_[i].id] = i;
  for (auto& r : relays_) {
    std::sort(r.incoming.begin(), r.incoming.end());
    std::sort(r.outgoing.begin(), r.outgoing.end());
  }
  // Pair each array with its equal-length reverse, when present.
  for (auto& arr : arrays_) {
    for (ArrayId cand : relays_[relay_idx_[arr.to]].outgoing) {
      const auto& other = arrays_[array_idx_[cand]];
      if (other.to == arr.from && other.length == arr.length) {
        arr.reverse = cand;
        break;
      }
    }
  }
  // Reflecting behaviors require a return array for every incoming array;
  // checking here keeps stepping total.
  for (const auto& r : relays_) {
    if (!needs_return_array(r.behavior.kind)) continue;
    for (ArrayId in : r.incoming) {
      if (!arrays_[array_idx_[in]].reverse) {
        throw std::invalid_argument(
            "relay " + std::to_string(r.id) + " (" +
            to_string(r.behavior.kind) + "): incoming array " +
            std::to_string(in) + " has no paired return array");
      }
    }
  }
}

std::size_t Engine::relay_index(RelayId id) const {
  auto it = relay_idx_.find(id);
  if (it == relay_idx_.end()) {
    throw std::invalid_argument("unknown relay id " + std::to_string(id));
  }
  return it->second;
}

std::size_t Engine::array_index(ArrayId id) const {
  auto it = array_idx_.find(id);
  if (it == array_idx_.end()) {
    throw std::invalid_argument("unknown array id " + std::to_string(id));
  }
  return it->second;
}

const Signal& Engine::signal(SignalId id) const {
  if (id >= signals_.size()) {
    throw std::invalid_argument("unknown signal id " + std::to_string(id));
  }
  return signals_[static_cast<std::size_t>(id)];
}

const RelayNode& Engine::relay(RelayId id) const {
  return relays_[relay_index(id)];
}

RelayNode& Engine::relay_mut(RelayId id) { return relays_[relay_index(id)]; }

const DirectedArray& Engine::array(ArrayId id) const {
  return arrays_[array_index(id)];
}

SignalId Engine::new_signal(BigInt amplitude, std::optional<SignalId> parent,
                            Step birth_step, RelayId birth_site) {
  SignalId id = signals_.size();
  Signal s;
  s.id = id;
  s.amplitude = std::move(amplitude);
  s.parent = parent;
  s.birth_step = birth_step;
  s.birth_site = birth_site;
  s.entry_step = birth_step;
  s.entry_cell = 1;
  signals_.push_back(std::move(s));
  return id;
}

SignalId Engine::inject(ArrayId array_id, int cell, BigInt amplitude) {
  if (step_ != 0) {
    throw std::logic_error("inject: only allowed at step 0");
  }
  if (amplitude == 0) {
    throw std::invalid_argument("inject: amplitude must be nonzero");
  }
  auto& arr = arrays_[array_index(array_id)];
  if (cell < 1 || cell > arr.length) {
    throw std::invalid_argument("inject: cell out of range");
  }
  auto& slot = arr.cells[static_cast<std::size_t>(cell - 1)];
  if (!slot.empty()) {
    throw std::invalid_argument("inject: cell occupied");
  }
  SignalId id = new_signal(amplitude, std::nullopt, 0, arr.from);
  signals_[id].entry_cell = cell;
  slot.push_back(id);
  ++live_;
  TraceEvent ev;
  ev.step = 0;
  ev.kind = EventKind::inject;
  ev.signals = {id};
  ev.amplitudes = {std::move(amplitude)};
  ev.array = arr.id;
  ev.cell = cell;
  ev.relay = arr.from;
  trace_.push_back(ev);
  return id;
}

void Engine::emit_child(RelayNode& relay, SignalId parent, BigInt amplitude,
                        ArrayId target, Step now,
                        std::vector<TraceEvent>& events) {
  auto& arr = arrays_[array_index(target)];
  SignalId child = new_signal(std::move(amplitude), parent, now, relay.id);
  auto& slot = arr.cells.front();
  if (policy_ == CollisionPolicy::tiebreak && !slot.empty()) {
    throw std::logic_error("cell coincidence in first cell of array " +
                           std::to_string(target));
  }
  slot.push_back(child);
  ++live_;
  TraceEvent ev;
  ev.step = now;
  ev.kind = EventKind::emit;
  ev.signals = {child};
  ev.amplitudes = {signals_[child].amplitude};
  ev.relay = relay.id;
  ev.array = target;
  ev.cell = 1;
  events.push_back(std::move(ev));
}

void Engine::apply_prime_vertex(RelayNode& relay, SignalId incident,
                                ArrayId via, Step now,
                                std::vector<TraceEvent>& events) {
  const BigInt amp = signals_[incident].amplitude;
  if (amp <= 0) {
    throw std::logic_error("prime_vertex: non-positive amplitude");
  }
  const BigInt& p = relay.behavior.prime;
  auto& st = relay.state;
  auto log_site_event = [&](EventKind kind) {
    TraceEvent ev;
    ev.step = now;
    ev.kind = kind;
    ev.signals = {incident};
    ev.amplitudes = {amp};
    ev.relay = relay.id;
    ev.array = via;
    events.push_back(std::move(ev));
  };
  if (amp % p == 0) {
    // Revisit; dropped unless this closes a full cycle at the home relay.
    if (st.cycle_home && amp == st.cycle_target) {
      st.arrivals.push_back({now, incident, amp});
      log_site_event(EventKind::arrival);
    } else {
      log_site_event(EventKind::filtered);
    }
    return;
  }
  if (mode_ == OverlayMode::bfs && st.visited) {
    log_site_event(EventKind::filtered);
    return;
  }
  if (st.is_destination) {
    if (mode_ == OverlayMode::bfs && !st.arrivals.empty()) return;
    st.arrivals.push_back({now, incident, amp});
    log_site_event(EventKind::arrival);
    return;
  }
  BigInt amplified = amp * p;
  st.visited = true;
  const std::optional<ArrayId> reverse = arrays_[array_index(via)].reverse;
  for (ArrayId out : relay.outgoing) {
    if (reverse && *reverse == out) continue;
    emit_child(relay, incident, amplified, out, now, events);
  }
}

void Engine::apply_behavior(RelayNode& relay, SignalId incident, ArrayId via,
                            Step now, std::vector<TraceEvent>& events) {
  const auto& arr = arrays_[array_index(via)];
  const std::optional<ArrayId> reverse = arr.reverse;
  const BigInt amp = signals_[incident].amplitude;
  switch (relay.behavior.kind) {
    case BehaviorKind::bounce:
      emit_child(relay, incident, amp, *reverse, now, events);
      break;
    case BehaviorKind::negate:
      emit_child(relay, incident, negate_amplitude(amp), *reverse, now,
                 events);
      break;
    case BehaviorKind::amplify:
      emit_child(relay, incident, amplify_amplitude(relay.behavior.gain, amp),
                 *reverse, now, events);
      break;
    case BehaviorKind::attenuate: {
      auto next = attenuate_amplitude(amp);
      if (!next) {
        TraceEvent ev;
        ev.step = now;
        ev.kind = EventKind::annihilated;
        ev.signals = {incident};
        ev.amplitudes = {amp};
        ev.relay = relay.id;
        ev.array = via;
        events.push_back(std::move(ev));
      } else {
        emit_child(relay, incident, *next, *reverse, now, events);
      }
      break;
    }
    case BehaviorKind::split:
      for (ArrayId out : relay.outgoing) {
        if (reverse && *reverse == out) continue;
        emit_child(relay, incident, amp, out, now, events);
      }
      break;
    case BehaviorKind::prime_vertex:
      apply_prime_vertex(relay, incident, via, now, events);
      break;
  }
}

std::vector<TraceEvent> Engine::step() {
  const Step now = step_ + 1;
  std::vector<TraceEvent> events;

  // Phase 1: collect signals in last cells as incident on their to-relays.
  struct Incidence {
    SignalId signal;
    ArrayId via;
  };
  std::map<RelayId, std::vector<Incidence>> incident;
  for (auto& arr : arrays_) {
    auto& last = arr.cells.back();
    if (last.empty()) continue;
    for (SignalId id : last) {
      const Signal& s = signals_[id];
      // Unit propagation speed: entry cell plus steps elapsed lands exactly
      // on the cell past the array end at collection time.
      if (now != s.entry_step + static_cast<Step>(arr.length - s.entry_cell) + 1) {
        throw std::logic_error("unit-speed invariant violated for signal " +
                               std::to_string(id));
      }
      incident[arr.to].push_back({id, arr.id});
      --live_;
      TraceEvent ev;
      ev.step = now;
      ev.kind = EventKind::incident;
      ev.signals = {id};
      ev.amplitudes = {s.amplitude};
      ev.relay = arr.to;
      ev.array = arr.id;
      ev.cell = arr.length;
      events.push_back(std::move(ev));
    }
    last.clear();
  }

  // Phase 2: shift every remaining signal forward one cell.
  TraceEvent shift_ev;
  shift_ev.step = now;
  shift_ev.kind = EventKind::shift;
  for (auto& arr : arrays_) {
    for (int i = arr.length - 1; i >= 1; --i) {
      auto& src = arr.cells[static_cast<std::size_t>(i - 1)];
      auto& dst = arr.cells[static_cast<std::size_t>(i)];
      if (src.empty()) continue;
      for (SignalId id : src) shift_ev.signals.push_back(id);
      dst = std::move(src);
      src.clear();
    }
  }
  events.push_back(std::move(shift_ev));

  // Phase 3: relay emission, relays in id order, incident signals ordered by
  // (|amplitude|, id) so the tie-break is deterministic.
  for (auto& [relay_id, list] : incident) {
    std::sort(list.begin(), list.end(),
              [this](const Incidence& a, const Incidence& b) {
                BigInt ma = abs(signals_[a.signal].amplitude);
                BigInt mb = abs(signals_[b.signal].amplitude);
                if (ma != mb) return ma < mb;
                return a.signal < b.signal;
              });
    RelayNode& relay = relays_[relay_index(relay_id)];
    std::size_t survivors = list.size();
    if (policy_ == CollisionPolicy::tiebreak && list.size() > 1) {
      survivors = 1;
      TraceEvent ev;
      ev.step = now;
      ev.kind = EventKind::collision_tiebreak;
      for (const auto& inc : list) {
        ev.signals.push_back(inc.signal);
        ev.amplitudes.push_back(signals_[inc.signal].amplitude);
      }
      ev.relay = relay_id;
      events.push_back(std::move(ev));
    }
    for (std::size_t i = 0; i < survivors; ++i) {
      apply_behavior(relay, list[i].signal, list[i].via, now, events);
    }
  }

  step_ = now;
  trace_.insert(trace_.end(), events.begin(), events.end());
  return events;
}

RunOutcome Engine::run_until(const std::function<bool(const Engine&)>& halt,
                             Step max_steps) {
  Step executed = 0;
  while (executed < max_steps) {
    step();
    ++executed;
    if (halt(*this)) return {executed, HaltReason::predicate};
    if (live_ == 0) return {executed, HaltReason::quiescent};
  }
  return {executed, HaltReason::step_budget};
}

Frame Engine::occupancy() const {
  Frame frame;
  for (const auto& arr : arrays_) {
    std::vector<std::vector<BigInt>> cells;
    cells.reserve(arr.cells.size());
    for (const auto& slot : arr.cells) {
      std::vector<BigInt> amps;
      for (SignalId id : slot) amps.push_back(signals_[id].amplitude);
      std::sort(amps.begin(), amps.end());
      cells.push_back(std::move(amps));
    }
    frame[arr.id] = std::move(cells);
  }
  return frame;
}

Engine Engine::from_state(const RawState& state) {
  Engine e(state.topology, state.mode);
  e.step_ = state.step;
  e.signals_ = state.signals;
  for (std::size_t i = 0; i < e.signals_.size(); ++i) {
    if (e.signals_[i].id != i) {
      throw std::invalid_argument("snapshot: signal ids must be dense");
    }
  }
  for (const auto& [array_id, cells] : state.cells) {
    auto& arr = e.arrays_[e.array_index(array_id)];
    if (cells.size() != arr.cells.size()) {
      throw std::invalid_argument("snapshot: cell count mismatch for array " +
                                  std::to_string(array_id));
    }
    arr.cells = cells;
    for (const auto& slot : arr.cells) {
      for (SignalId id : slot) {
        if (id >= e.signals_.size()) {
          throw std::invalid_argument("snapshot: cell references unknown signal");
        }
        ++e.live_;
      }
    }
  }
  for (const auto& [relay_id, st] : state.relay_states) {
    e.relays_[e.relay_index(relay_id)].state = st;
  }
  return e;
}

}  // namespace spider
