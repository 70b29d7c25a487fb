#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spider/types.hpp"

namespace spider {

enum class BehaviorKind {
  bounce,        // reflect to the paired return array, amplitude unchanged
  negate,        // reflect with sign flipped
  attenuate,     // reflect with |amplitude| reduced by one; 0 annihilates
  amplify,       // reflect with amplitude multiplied by a fixed gain
  split,         // pass a copy to every outgoing array except the reverse edge
  prime_vertex,  // graph-mode relay: filter / amplify by prime label / fan out
};

const char* to_string(BehaviorKind kind);
BehaviorKind behavior_kind_from_string(const std::string& name);

/// Arrival record kept by destination and cycle-home relays.
struct Arrival {
  Step step = 0;
  SignalId signal = 0;
  BigInt amplitude;
};

/// Persistent per-relay state used by prime_vertex behaviors.
struct PrimeVertexState {
  bool visited = false;
  bool is_destination = false;
  bool cycle_home = false;
  BigInt cycle_target = 0;  // full prime product; checked only when cycle_home
  std::vector<Arrival> arrivals;
};

struct Behavior {
  BehaviorKind kind = BehaviorKind::bounce;
  BigInt gain = 1;   // amplify only, nonzero
  BigInt prime = 0;  // prime_vertex only

  static Behavior bounce() { return {BehaviorKind::bounce, 1, 0}; }
  static Behavior negate() { return {BehaviorKind::negate, 1, 0}; }
  static Behavior attenuate() { return {BehaviorKind::attenuate, 1, 0}; }
  static Behavior split() { return {BehaviorKind::split, 1, 0}; }
  static Behavior amplify(BigInt k) {
    if (k == 0) throw std::invalid_argument("amplify gain must be nonzero");
    return {BehaviorKind::amplify, std::move(k), 0};
  }
  static Behavior prime_vertex(BigInt p) {
    return {BehaviorKind::prime_vertex, 1, std::move(p)};
  }
};

// Amplitude maps of the reflecting behaviors, kept as free functions so the
// linearity properties can be tested without an engine.
inline BigInt bounce_amplitude(const BigInt& a) { return a; }
inline BigInt negate_amplitude(const BigInt& a) { return -a; }
inline BigInt amplify_amplitude(const BigInt& k, const BigInt& a) { return k * a; }

/// One step of degradation; nullopt means the signal annihilates.
inline std::optional<BigInt> attenuate_amplitude(const BigInt& a) {
  BigInt mag = abs(a) - 1;
  if (mag == 0) return std::nullopt;
  return a > 0 ? mag : -mag;
}

}  // namespace spider
