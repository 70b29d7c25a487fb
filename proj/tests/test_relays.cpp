#include <doctest.h>

#include "spider/behavior.hpp"
#include "spider/demos.hpp"
#include "spider/engine.hpp"

using namespace spider;

namespace {

/// State period of a two-relay loop, measured on id-erased occupancy frames.
Step measure_period(const DemoNetwork& demo, Step limit) {
  Engine e = demo.make_engine();
  Frame initial = e.occupancy();
  for (Step t = 1; t <= limit; ++t) {
    e.step();
    if (e.occupancy() == initial) return t;
  }
  return 0;
}

}  // namespace

TEST_CASE("bounce: amplitude is preserved across the relay") {
  for (BigInt a : {BigInt(5), BigInt(-2)}) {
    auto demo = bounce_loop(1, a);
    Engine e = demo.make_engine();
    e.step();
    REQUIRE(e.array(1).cells[0].size() == 1);
    CHECK(e.signal(e.array(1).cells[0][0]).amplitude == a);
  }
}

TEST_CASE("bounce loop: state period is exactly 2L") {
  for (int L : {1, 2, 3, 5}) {
    CAPTURE(L);
    CHECK(measure_period(bounce_loop(L, 9), 6 * L) == 2 * static_cast<Step>(L));
  }
}

TEST_CASE("negate: sign flips across the relay") {
  Topology t;
  t.relays = {{0, Behavior::negate()}, {1, Behavior::negate()}};
  t.arrays = {{0, 0, 1, 2}, {1, 1, 0, 2}};
  Engine e(t);
  e.inject(0, 2, 3);
  e.step();
  REQUIRE(e.array(1).cells[0].size() == 1);
  CHECK(e.signal(e.array(1).cells[0][0]).amplitude == -3);
}

TEST_CASE("negate loop: double application restores the sign") {
  // Two negate relays: the sign flips at each incidence, so a full circuit
  // (two incidences, 2L steps) restores the state exactly.
  for (int L : {1, 3}) {
    CAPTURE(L);
    Topology t;
    t.relays = {{0, Behavior::negate()}, {1, Behavior::negate()}};
    t.arrays = {{0, 0, 1, L}, {1, 1, 0, L}};
    DemoNetwork demo{t, {{0, 1, 6}}, OverlayMode::none};
    CHECK(measure_period(demo, 6 * L) == 2 * static_cast<Step>(L));
    Engine e = demo.make_engine();
    for (int s = 0; s < L; ++s) e.step();
    REQUIRE(e.array(1).cells[0].size() == 1);
    CHECK(e.signal(e.array(1).cells[0][0]).amplitude == -6);
    for (int s = 0; s < L; ++s) e.step();
    REQUIRE(e.array(0).cells[0].size() == 1);
    CHECK(e.signal(e.array(0).cells[0][0]).amplitude == 6);
  }
}

TEST_CASE("alternating loop: one negate relay flips sign once per circuit") {
  // bounce + negate: the cell amplitude alternates a, -a with state period 4L.
  for (int L : {1, 2, 3}) {
    CAPTURE(L);
    auto demo = alternating_loop(L, 4);
    CHECK(measure_period(demo, 10 * L) == 4 * static_cast<Step>(L));
    Engine e = demo.make_engine();
    BigInt expected = 4;
    for (int circuit = 0; circuit < 4; ++circuit) {
      for (int s = 0; s < 2 * L; ++s) e.step();
      expected = -expected;  // one sign flip per full circuit
      REQUIRE(e.array(0).cells[0].size() == 1);
      CHECK(e.signal(e.array(0).cells[0][0]).amplitude == expected);
    }
  }
}

TEST_CASE("attenuate: magnitude drops by one, annihilates at zero") {
  CHECK(attenuate_amplitude(3) == BigInt(2));
  CHECK(attenuate_amplitude(-3) == BigInt(-2));
  CHECK(!attenuate_amplitude(1).has_value());
  CHECK(!attenuate_amplitude(-1).has_value());
}

TEST_CASE("degrading loop: quiescent after exactly m incidences") {
  for (int m : {1, 2, 4}) {
    for (int L : {1, 3}) {
      CAPTURE(m);
      CAPTURE(L);
      Engine e = degrading_loop(L, m).make_engine();
      Step quiescent_at = 0;
      int incidences = 0;
      for (Step t = 1; t <= static_cast<Step>((m + 1) * L + 2); ++t) {
        for (const auto& ev : e.step()) {
          if (ev.kind == EventKind::incident) ++incidences;
        }
        if (e.live_signal_count() == 0) {
          quiescent_at = t;
          break;
        }
      }
      CHECK(incidences == m);
      CHECK(quiescent_at == static_cast<Step>(m * L));
      // The terminal event is an annihilation.
      CHECK(e.trace().back().kind == EventKind::annihilated);
    }
  }
}

TEST_CASE("amplify loop: geometric progression a * k^n") {
  Engine e = amplify_loop(1, 2, 3).make_engine();
  BigInt expected = 3;
  for (int n = 1; n <= 20; ++n) {
    e.step();
    expected *= 2;
    REQUIRE(e.live_signal_count() == 1);
    bool found = false;
    for (const auto& arr : e.arrays()) {
      for (const auto& slot : arr.cells) {
        for (SignalId id : slot) {
          CHECK(e.signal(id).amplitude == expected);
          found = true;
        }
      }
    }
    CHECK(found);
  }
}

TEST_CASE("amplify(1) equals bounce; amplify(-1) equals negate") {
  auto frames_of = [](DemoNetwork demo, int steps) {
    Engine e = demo.make_engine();
    std::vector<Frame> frames;
    for (int i = 0; i < steps; ++i) {
      e.step();
      frames.push_back(e.occupancy());
    }
    return frames;
  };
  CHECK(frames_of(amplify_loop(2, 1, 5), 12) ==
        frames_of(bounce_loop(2, 5), 12));
  Topology neg;
  neg.relays = {{0, Behavior::negate()}, {1, Behavior::negate()}};
  neg.arrays = {{0, 0, 1, 2}, {1, 1, 0, 2}};
  DemoNetwork negdemo{neg, {{0, 1, 5}}, OverlayMode::none};
  CHECK(frames_of(amplify_loop(2, -1, 5), 12) == frames_of(negdemo, 12));
}

TEST_CASE("amplify: zero gain is rejected") {
  CHECK_THROWS_AS(Behavior::amplify(0), std::invalid_argument);
}

TEST_CASE("split: fan-out excludes the reverse edge") {
  // Degree-4 hub: relay 0 center, neighbors 1..4, unit paired arrays.
  Topology t;
  t.relays.push_back({0, Behavior::split()});
  ArrayId next = 0;
  for (RelayId i = 1; i <= 4; ++i) {
    t.relays.push_back({i, Behavior::split()});
    t.arrays.push_back({next++, i, 0, 1});
    t.arrays.push_back({next++, 0, i, 1});
  }
  Engine e(t);
  e.inject(0, 1, 6);  // arrives from relay 1
  e.step();
  int children = 0;
  for (const auto& arr : e.arrays()) {
    if (arr.from != 0) continue;
    for (const auto& slot : arr.cells) {
      for (SignalId id : slot) {
        ++children;
        CHECK(e.signal(id).amplitude == 6);
        CHECK(arr.to != 1);  // reverse edge excluded
      }
    }
  }
  CHECK(children == 3);
}

TEST_CASE("split: a dead end absorbs the signal") {
  Topology t;
  t.relays = {{0, Behavior::split()}, {1, Behavior::split()}};
  t.arrays = {{0, 0, 1, 2}};  // no return array at all
  Engine e(t);
  e.inject(0, 1, 1);
  e.step();
  e.step();
  CHECK(e.live_signal_count() == 0);
}

TEST_CASE("linearity: bounce, negate, amplify scale; attenuate does not") {
  for (BigInt a : {BigInt(2), BigInt(-7)}) {
    for (BigInt m : {BigInt(2), BigInt(-3)}) {
      CHECK(bounce_amplitude(m * a) == m * bounce_amplitude(a));
      CHECK(negate_amplitude(m * a) == m * negate_amplitude(a));
      CHECK(amplify_amplitude(5, m * a) == m * amplify_amplitude(5, a));
    }
  }
  // Non-linearity witness: attenuate(2*2) = 3 but 2*attenuate(2) = 2.
  CHECK(*attenuate_amplitude(4) == BigInt(3));
  CHECK(BigInt(2) * *attenuate_amplitude(2) == BigInt(2));
  CHECK(*attenuate_amplitude(4) != BigInt(2) * *attenuate_amplitude(2));
}
