#pragma once

#include <string>
#include <vector>

#include "spider/engine.hpp"

namespace spider {

struct Injection {
  ArrayId array;
  int cell;
  BigInt amplitude;
};

struct DemoNetwork {
  Topology topology;
  std::vector<Injection> injections;
  OverlayMode mode = OverlayMode::none;

  Engine make_engine() const;
};

// Two-relay loops over paired arrays of the given length.
DemoNetwork bounce_loop(int length, BigInt amplitude);
DemoNetwork alternating_loop(int length, BigInt amplitude);  // negate + bounce
DemoNetwork degrading_loop(int length, BigInt amplitude);    // two attenuators
DemoNetwork amplify_loop(int length, BigInt gain, BigInt amplitude);

/// Chain of 2*half+1 split relays with unit paired arrays; the impulse is
/// injected on both arrays leaving the center relay.
DemoNetwork dalembert_line(int half, BigInt amplitude);

/// One diff-friendly text frame of the current occupancy.
std::string render_frame(const Engine& engine);

/// Build the named demo, run it, and return one frame per step (step 0
/// first). Names: bounce-loop, alternating-loop, degrading-loop,
/// dalembert-line.
std::vector<std::string> run_demo(const std::string& name, int length,
                                  const BigInt& amplitude, Step steps);

}  // namespace spider
