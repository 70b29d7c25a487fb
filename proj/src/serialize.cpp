#include "spider/serialize.hpp"

#include <sstream>

namespace spider {

using nlohmann::json;

namespace {

json behavior_to_json(const Behavior& b) {
  json j;
  j["kind"] = to_string(b.kind);
  if (b.kind == BehaviorKind::amplify) j["gain"] = b.gain.str();
  if (b.kind == BehaviorKind::prime_vertex) j["prime"] = b.prime.str();
  return j;
}

Behavior behavior_from_json(const json& j) {
  auto kind = behavior_kind_from_string(j.at("kind").get<std::string>());
  switch (kind) {
    case BehaviorKind::amplify:
      return Behavior::amplify(BigInt(j.at("gain").get<std::string>()));
    case BehaviorKind::prime_vertex:
      return Behavior::prime_vertex(BigInt(j.at("prime").get<std::string>()));
    case BehaviorKind::bounce: return Behavior::bounce();
    case BehaviorKind::negate: return Behavior::negate();
    case BehaviorKind::attenuate: return Behavior::attenuate();
    case BehaviorKind::split: return Behavior::split();
  }
  throw std::invalid_argument("bad behavior");
}

json state_to_json(const PrimeVertexState& st) {
  json j;
  j["visited"] = st.visited;
  j["is_destination"] = st.is_destination;
  j["cycle_home"] = st.cycle_home;
  j["cycle_target"] = st.cycle_target.str();
  json arrivals = json::array();
  for (const auto& a : st.arrivals) {
    arrivals.push_back({{"step", a.step},
                        {"signal", a.signal},
                        {"amplitude", a.amplitude.str()}});
  }
  j["arrivals"] = std::move(arrivals);
  return j;
}

PrimeVertexState state_from_json(const json& j) {
  PrimeVertexState st;
  st.visited = j.at("visited").get<bool>();
  st.is_destination = j.at("is_destination").get<bool>();
  st.cycle_home = j.at("cycle_home").get<bool>();
  st.cycle_target = BigInt(j.at("cycle_target").get<std::string>());
  for (const auto& a : j.at("arrivals")) {
    st.arrivals.push_back({a.at("step").get<Step>(),
                           a.at("signal").get<SignalId>(),
                           BigInt(a.at("amplitude").get<std::string>())});
  }
  return st;
}

}  // namespace

json snapshot(const Engine& engine) {
  json j;
  j["format"] = "spider-snapshot-v1";
  j["mode"] = to_string(engine.mode());
  j["step"] = engine.current_step();
  json relays = json::array();
  for (const auto& r : engine.relays()) {
    json rj;
    rj["id"] = r.id;
    rj["behavior"] = behavior_to_json(r.behavior);
    if (r.behavior.kind == BehaviorKind::prime_vertex) {
      rj["state"] = state_to_json(r.state);
    }
    relays.push_back(std::move(rj));
  }
  j["relays"] = std::move(relays);
  json arrays = json::array();
  for (const auto& a : engine.arrays()) {
    json aj;
    aj["id"] = a.id;
    aj["from"] = a.from;
    aj["to"] = a.to;
    aj["length"] = a.length;
    aj["cells"] = a.cells;
    arrays.push_back(std::move(aj));
  }
  j["arrays"] = std::move(arrays);
  json signals = json::array();
  for (const auto& s : engine.signals()) {
    json sj;
    sj["id"] = s.id;
    sj["amplitude"] = s.amplitude.str();
    if (s.parent) {
      sj["parent"] = *s.parent;
    } else {
      sj["parent"] = nullptr;
    }
    sj["birth_step"] = s.birth_step;
    sj["birth_site"] = s.birth_site;
    sj["entry_step"] = s.entry_step;
    sj["entry_cell"] = s.entry_cell;
    signals.push_back(std::move(sj));
  }
  j["signals"] = std::move(signals);
  return j;
}

Engine restore_engine(const json& snap) {
  if (snap.value("format", "") != "spider-snapshot-v1") {
    throw std::invalid_argument("not a spider snapshot");
  }
  Engine::RawState state;
  state.mode = overlay_mode_from_string(snap.at("mode").get<std::string>());
  state.step = snap.at("step").get<Step>();
  for (const auto& rj : snap.at("relays")) {
    RelaySpec spec{rj.at("id").get<RelayId>(),
                   behavior_from_json(rj.at("behavior"))};
    state.topology.relays.push_back(spec);
    if (rj.contains("state")) {
      state.relay_states.push_back({spec.id, state_from_json(rj.at("state"))});
    }
  }
  for (const auto& aj : snap.at("arrays")) {
    ArraySpec spec{aj.at("id").get<ArrayId>(), aj.at("from").get<RelayId>(),
                   aj.at("to").get<RelayId>(), aj.at("length").get<int>()};
    state.topology.arrays.push_back(spec);
    state.cells.push_back(
        {spec.id, aj.at("cells").get<std::vector<std::vector<SignalId>>>()});
  }
  for (const auto& sj : snap.at("signals")) {
    Signal s;
    s.id = sj.at("id").get<SignalId>();
    s.amplitude = BigInt(sj.at("amplitude").get<std::string>());
    if (!sj.at("parent").is_null()) s.parent = sj.at("parent").get<SignalId>();
    s.birth_step = sj.at("birth_step").get<Step>();
    s.birth_site = sj.at("birth_site").get<RelayId>();
    s.entry_step = sj.at("entry_step").get<Step>();
    s.entry_cell = sj.at("entry_cell").get<int>();
    state.signals.push_back(std::move(s));
  }
  return Engine::from_state(state);
}

json event_to_json(const TraceEvent& event) {
  json j;
  j["kind"] = to_string(event.kind);
  j["signals"] = event.signals;
  json amps = json::array();
  for (const auto& a : event.amplitudes) amps.push_back(a.str());
  j["amplitudes"] = std::move(amps);
  if (event.relay >= 0) j["relay"] = event.relay;
  if (event.array >= 0) j["array"] = event.array;
  if (event.cell > 0) j["cell"] = event.cell;
  return j;
}

std::string trace_to_jsonl(const Engine& engine) {
  std::ostringstream out;
  std::size_t cursor = 0;
  const auto& trace = engine.trace();
  for (Step t = 0; t <= engine.current_step(); ++t) {
    json record;
    record["step"] = t;
    json events = json::array();
    while (cursor < trace.size() && trace[cursor].step == t) {
      events.push_back(event_to_json(trace[cursor]));
      ++cursor;
    }
    record["events"] = std::move(events);
    out << record.dump() << "\n";
  }
  return out.str();
}

json to_json(const PathResult& result, const SolverStats& stats) {
  json j;
  j["found"] = true;
  j["distance"] = result.distance;
  j["path"] = result.vertices;
  j["vertex_set"] = result.vertex_set;
  j["amplitude"] = result.arrival_amplitude.str();
  j["steps"] = result.arrival_step;
  j["steps_executed"] = stats.steps_executed;
  j["signals_created"] = stats.signals_created;
  return j;
}

json to_json(const CycleResult& result, const SolverStats& stats) {
  json j;
  j["found"] = true;
  j["cycle"] = result.vertices;
  j["weight"] = result.total_weight;
  j["steps"] = result.arrival_step;
  j["steps_executed"] = stats.steps_executed;
  j["signals_created"] = stats.signals_created;
  return j;
}

json to_json(const std::vector<WeightedPath>& paths,
             const SolverStats& stats) {
  json j;
  json list = json::array();
  for (const auto& [path, weight] : paths) {
    list.push_back({{"path", path}, {"weight", weight}});
  }
  j["paths"] = std::move(list);
  j["steps_executed"] = stats.steps_executed;
  j["signals_created"] = stats.signals_created;
  return j;
}

}  // namespace spider
