#include "spider/demos.hpp"

#include <sstream>
#include <stdexcept>

namespace spider {

Engine DemoNetwork::make_engine() const {
  Engine engine(topology, mode);
  for (const auto& inj : injections) {
    engine.inject(inj.array, inj.cell, inj.amplitude);
  }
  return engine;
}

namespace {

DemoNetwork two_relay_loop(Behavior a, Behavior b, int length,
                           BigInt amplitude) {
  if (length < 1) throw std::invalid_argument("loop length must be >= 1");
  DemoNetwork demo;
  demo.topology.relays = {{0, std::move(a)}, {1, std::move(b)}};
  demo.topology.arrays = {{0, 0, 1, length}, {1, 1, 0, length}};
  demo.injections = {{0, 1, std::move(amplitude)}};
  return demo;
}

}  // namespace

DemoNetwork bounce_loop(int length, BigInt amplitude) {
  return two_relay_loop(Behavior::bounce(), Behavior::bounce(), length,
                        std::move(amplitude));
}

DemoNetwork alternating_loop(int length, BigInt amplitude) {
  return two_relay_loop(Behavior::bounce(), Behavior::negate(), length,
                        std::move(amplitude));
}

DemoNetwork degrading_loop(int length, BigInt amplitude) {
  return two_relay_loop(Behavior::attenuate(), Behavior::attenuate(), length,
                        std::move(amplitude));
}

DemoNetwork amplify_loop(int length, BigInt gain, BigInt amplitude) {
  return two_relay_loop(Behavior::amplify(gain), Behavior::amplify(gain),
                        length, std::move(amplitude));
}

DemoNetwork dalembert_line(int half, BigInt amplitude) {
  if (half < 1) throw std::invalid_argument("line half-length must be >= 1");
  DemoNetwork demo;
  const RelayId n = static_cast<RelayId>(2 * half + 1);
  for (RelayId i = 0; i < n; ++i) {
    demo.topology.relays.push_back({i, Behavior::split()});
  }
  ArrayId next = 0;
  ArrayId center_right = 0, center_left = 0;
  const RelayId center = static_cast<RelayId>(half);
  for (RelayId i = 0; i + 1 < n; ++i) {
    ArrayId fwd = next++;
    ArrayId rev = next++;
    demo.topology.arrays.push_back({fwd, i, static_cast<RelayId>(i + 1), 1});
    demo.topology.arrays.push_back({rev, static_cast<RelayId>(i + 1), i, 1});
    if (i == center) center_right = fwd;
    if (i + 1 == center) center_left = rev;
  }
  demo.injections = {{center_right, 1, amplitude}, {center_left, 1, amplitude}};
  return demo;
}

std::string render_frame(const Engine& engine) {
  std::ostringstream out;
  out << "step " << engine.current_step() << "\n";
  for (const auto& arr : engine.arrays()) {
    out << "  array " << arr.id << " (" << arr.from << "->" << arr.to << "):";
    for (const auto& slot : arr.cells) {
      out << ' ';
      if (slot.empty()) {
        out << '.';
      } else {
        for (std::size_t i = 0; i < slot.size(); ++i) {
          if (i) out << '+';
          out << engine.signal(slot[i]).amplitude;
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

std::vector<std::string> run_demo(const std::string& name, int length,
                                  const BigInt& amplitude, Step steps) {
  DemoNetwork demo;
  if (name == "bounce-loop") {
    demo = bounce_loop(length, amplitude);
  } else if (name == "alternating-loop") {
    demo = alternating_loop(length, amplitude);
  } else if (name == "degrading-loop") {
    demo = degrading_loop(length, amplitude);
  } else if (name == "dalembert-line") {
    demo = dalembert_line(length, amplitude);
  } else {
    throw std::invalid_argument("unknown demo name: " + name);
  }
  Engine engine = demo.make_engine();
  std::vector<std::string> frames;
  frames.push_back(render_frame(engine));
  for (Step t = 0; t < steps; ++t) {
    engine.step();
    frames.push_back(render_frame(engine));
    if (engine.live_signal_count() == 0) break;
  }
  return frames;
}

}  // namespace spider
