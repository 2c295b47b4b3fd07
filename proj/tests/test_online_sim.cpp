#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "ponyexpress/error.hpp"
#include "ponyexpress/bc_solver.hpp"
#include "ponyexpress/generators.hpp"
#include "ponyexpress/hb_solver.hpp"
#include "ponyexpress/online_sim.hpp"
#include "ponyexpress/pony_solver.hpp"
#include "ponyexpress/validate.hpp"

namespace pony {
namespace {

ValidatedInstance make_inst(Variant variant,
                            std::vector<std::pair<double, double>> pv) {
  ProblemInstance inst;
  inst.variant = variant;
  int id = 0;
  for (auto [p, v] : pv) inst.robots.push_back({id++, p, v});
  return validate(inst);
}

double speed_of(const ValidatedInstance& inst, int id) {
  for (const Robot& r : inst.robots()) {
    if (r.id == id) return r.v;
  }
  ADD_FAILURE() << "unknown robot id " << id;
  return 0.0;
}

TEST(NextEvent, LoneInboundRobotPicksUp) {
  SimState s;
  s.variant = Variant::kPony;
  s.robots = {{0, 1.0, 0.5, 0.5, -1, false}};
  SimEvent ev = next_event(s);
  EXPECT_EQ(ev.type, EventType::kSourcePickup);
  EXPECT_EQ(ev.robot_a, 0);
  EXPECT_NEAR(ev.t, 0.5, 1e-15);
  EXPECT_NEAR(ev.x, 0.0, 1e-15);
}

TEST(NextEvent, SymmetricClosingPairMeetsHalfway) {
  SimState s;
  s.variant = Variant::kPony;
  s.robots = {{0, 1.0, 0.0, 0.0, +1, true},
              {1, 1.0, 1.0, 1.0, -1, false}};
  SimEvent ev = next_event(s);
  EXPECT_EQ(ev.type, EventType::kMeeting);
  EXPECT_EQ(ev.robot_a, 0);
  EXPECT_EQ(ev.robot_b, 1);
  EXPECT_NEAR(ev.t, 0.5, 1e-15);
  EXPECT_NEAR(ev.x, 0.5, 1e-15);
}

TEST(NextEvent, SourcePickupWinsTimeTies) {
  SimState s;
  s.variant = Variant::kHalfBroadcast;
  // Pickup by robot 0 at t=0.5 ties with the 1-2 contact at t=0.5; robots
  // 0 and 1 run parallel at equal speed and the 0-2 crossing comes later.
  s.robots = {{0, 1.0, 0.5, 0.5, -1, false},
              {1, 1.0, -0.2, -0.2, -1, true},
              {2, 0.2, -0.8, -0.8, +1, false}};
  SimEvent ev = next_event(s);
  EXPECT_EQ(ev.type, EventType::kSourcePickup);
  EXPECT_EQ(ev.robot_a, 0);
  EXPECT_NEAR(ev.t, 0.5, 1e-15);
}

TEST(NextEvent, NothingPendingThrows) {
  SimState s;
  s.variant = Variant::kPony;
  s.robots = {{0, 1.0, 0.5, 0.5, 0, true}};  // lone parked carrier
  try {
    next_event(s);
    FAIL() << "expected no-event error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNoEvent);
  }
}

TEST(Simulate, PonyRelayMatchesOfflineOptimum) {
  auto inst = make_inst(Variant::kPony, {{0.2, 1.0}, {0.9, 2.0}});
  SimResult res = simulate(inst);
  EXPECT_NEAR(res.objective, 47.0 / 60.0, 1e-12);
  EXPECT_NEAR(res.objective, solve_pony(inst).objective, 1e-12);
  // The log must contain the relay handover at t=11/30, x=1/6.
  bool saw_handover = false;
  for (const SimEvent& ev : res.events) {
    if (ev.type != EventType::kHandover) continue;
    saw_handover = true;
    EXPECT_EQ(ev.robot_a, 0);
    EXPECT_EQ(ev.robot_b, 1);
    EXPECT_NEAR(ev.t, 11.0 / 30.0, 1e-12);
    EXPECT_NEAR(ev.x, 1.0 / 6.0, 1e-12);
  }
  EXPECT_TRUE(saw_handover);
}

TEST(Simulate, HalfBroadcastAdversaryTakesTwo) {
  auto inst = validate(gen_hb_adversary());
  SimResult res = simulate(inst);
  EXPECT_NEAR(res.objective, 2.0, 1e-12);
  // The robot from -1 reaches the source at t=1, takes a copy, and heads
  // back to its own side's endpoint.
  bool saw_late_pickup = false;
  for (const SimEvent& ev : res.events) {
    if (ev.type == EventType::kSourcePickup && ev.robot_a == 1) {
      saw_late_pickup = true;
      EXPECT_NEAR(ev.t, 1.0, 1e-12);
      EXPECT_TRUE(ev.has_message_a);
      EXPECT_EQ(ev.heading_a, -1);
    }
  }
  EXPECT_TRUE(saw_late_pickup);
}

TEST(Simulate, BroadcastAdversaryTakesThree) {
  auto inst = validate(gen_bc_adversary(0.0));
  SimResult res = simulate(inst);
  EXPECT_NEAR(res.objective, 3.0, 1e-12);
  ASSERT_TRUE(res.time_pos.has_value());
  ASSERT_TRUE(res.time_neg.has_value());
  EXPECT_NEAR(*res.time_pos, 1.0, 1e-12);
  EXPECT_NEAR(*res.time_neg, 3.0, 1e-12);

  // The slower robot may never receive a handover, so the log contains
  // none; the two carriers cross at t=5/3 without any state change.
  bool saw_carrier_cross = false;
  for (const SimEvent& ev : res.events) {
    EXPECT_NE(ev.type, EventType::kHandover);
    if (ev.type == EventType::kMeeting && std::abs(ev.t - 5.0 / 3.0) < 1e-9) {
      saw_carrier_cross = true;
      EXPECT_TRUE(ev.has_message_a);
      EXPECT_TRUE(ev.has_message_b);
      EXPECT_NEAR(ev.x, 1.0 / 3.0, 1e-12);
    }
    if (ev.type == EventType::kSourcePickup && ev.robot_a == 1) {
      // Original side decides the pickup heading: +1 for this robot.
      EXPECT_NEAR(ev.t, 1.0, 1e-12);
      EXPECT_EQ(ev.heading_a, +1);
    }
  }
  EXPECT_TRUE(saw_carrier_cross);
}

TEST(Simulate, LoneBroadcastRobotAtSourceBounces) {
  auto inst = make_inst(Variant::kBroadcast, {{0.0, 1.0}});
  SimResult res = simulate(inst);
  EXPECT_NEAR(res.objective, 3.0, 1e-12);
  EXPECT_NEAR(*res.time_pos, 1.0, 1e-12);
  EXPECT_NEAR(*res.time_neg, 3.0, 1e-12);
  ASSERT_FALSE(res.events.empty());
  const SimEvent& first = res.events.front();
  EXPECT_EQ(first.type, EventType::kSourcePickup);
  EXPECT_NEAR(first.t, 0.0, 1e-15);
  EXPECT_EQ(first.heading_a, +1);  // source-start tie-break: positive side
  bool reversed_at_pos_endpoint = false;
  for (const SimEvent& ev : res.events) {
    if (std::abs(ev.t - 1.0) < 1e-12 && ev.robot_a == 0 && ev.heading_a == -1) {
      reversed_at_pos_endpoint = true;
    }
  }
  EXPECT_TRUE(reversed_at_pos_endpoint);
}

TEST(Simulate, HorizonGuard) {
  // The run above finishes exactly at t=3; an exact-horizon run must not
  // abort (the guard fires strictly beyond the horizon)...
  auto inst = make_inst(Variant::kBroadcast, {{0.0, 1.0}});
  SimConfig exact;
  exact.horizon = 3.0;
  EXPECT_NEAR(simulate(inst, exact).objective, 3.0, 1e-12);
  // ...while a horizon below the finishing time must.
  SimConfig tight;
  tight.horizon = 2.5;
  try {
    simulate(inst, tight);
    FAIL() << "expected horizon abort";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSimulationHorizonExceeded);
  }
}

TEST(Simulate, EventLogObeysProtocolRules) {
  int handovers_seen = 0;
  for (int seed = 0; seed < 200; ++seed) {
    const Variant variant = seed % 3 == 0   ? Variant::kPony
                            : seed % 3 == 1 ? Variant::kHalfBroadcast
                                            : Variant::kBroadcast;
    auto inst = validate(gen_random(variant, 1 + seed % 6, 4000 + seed));
    SimResult res = simulate(inst);
    const double lo = variant == Variant::kPony ? 0.0 : -1.0;
    double last_t = 0.0;
    std::map<int, bool> held;
    for (const SimEvent& ev : res.events) {
      EXPECT_GE(ev.t, last_t - 1e-12) << "event times must not go backwards";
      last_t = ev.t;
      EXPECT_GE(ev.x, lo - 1e-12);
      EXPECT_LE(ev.x, 1.0 + 1e-12);
      if (ev.type == EventType::kHandover) {
        ++handovers_seen;
        EXPECT_GT(speed_of(inst, ev.robot_b), speed_of(inst, ev.robot_a))
            << "receiver must be strictly faster";
        EXPECT_TRUE(ev.has_message_a);
        EXPECT_TRUE(ev.has_message_b);
        if (ev.x != 0.0) {
          EXPECT_EQ(ev.heading_b, ev.x > 0.0 ? 1 : -1)
              << "receiver heads for the endpoint nearest the meeting point";
        } else if (variant == Variant::kBroadcast) {
          // At the source the receiver inherits the giver's heading and the
          // giver then reverses, so the pair leaves in opposite directions.
          EXPECT_EQ(ev.heading_a, -ev.heading_b);
        } else {
          EXPECT_EQ(ev.heading_a, ev.heading_b)
              << "at the source the receiver inherits the giver's heading";
        }
      }
      // A copy, once held, is never revoked.
      if (ev.robot_a >= 0) {
        EXPECT_LE(held[ev.robot_a], ev.has_message_a);
        held[ev.robot_a] = ev.has_message_a;
      }
      if (ev.robot_b >= 0) {
        EXPECT_LE(held[ev.robot_b], ev.has_message_b);
        held[ev.robot_b] = ev.has_message_b;
      }
    }
  }
  EXPECT_GT(handovers_seen, 0) << "sample must exercise relay handovers";
}

TEST(Simulate, PonyAlwaysMatchesOfflineOptimum) {
  for (int seed = 0; seed < 300; ++seed) {
    auto inst = validate(gen_random(Variant::kPony, 1 + seed % 8, 5000 + seed));
    EXPECT_NEAR(simulate(inst).objective, solve_pony(inst).objective, 1e-9)
        << "seed " << seed;
  }
}

TEST(Simulate, HalfBroadcastStaysWithinClaimedRatioBound) {
  for (int seed = 0; seed < 300; ++seed) {
    auto inst =
        validate(gen_random(Variant::kHalfBroadcast, 1 + seed % 8, 6000 + seed));
    const double online = simulate(inst).objective;
    const double offline = solve_half_broadcast(inst).objective;
    EXPECT_LE(online / offline, 1.5 + 1e-6) << "seed " << seed;
  }
}

// The claimed worst-case ratio for the broadcast protocol is 1.8.  Instances
// with two same-side robots where the nearer one is faster drive the
// measured ratio well above that: the protocol sends the fast robot to the
// far endpoint first and lets only the slow robot serve the other side,
// while the optimum ferries the message across before committing.  This
// test documents the gap rather than hiding it.
TEST(Simulate, BroadcastStaysWithinClaimedRatioBound) {
  auto worst = validate(gen_random(Variant::kBroadcast, 2, 35));
  const double online = simulate(worst).objective;
  const double offline = solve_broadcast(worst, 1e-9).objective;
  EXPECT_LE(online / offline, 1.8 + 10 * 1e-9)
      << "two fast nearby robots at p=0.087,p=0.159 (v=1.929,v=1.924): "
      << "online " << online << " vs offline " << offline;

  int violations = 0;
  double worst_ratio = 0.0;
  for (int seed = 0; seed < 300; ++seed) {
    auto inst = validate(gen_random(Variant::kBroadcast, 1 + seed % 6, seed));
    const double ratio =
        simulate(inst).objective / solve_broadcast(inst, 1e-9).objective;
    worst_ratio = std::max(worst_ratio, ratio);
    if (ratio > 1.8 + 1e-6) ++violations;
  }
  EXPECT_EQ(violations, 0) << "max observed ratio " << worst_ratio;
}

TEST(TraceCsv, EmitsOneRowPerParticipantInEventOrder) {
  auto inst = make_inst(Variant::kPony, {{0.2, 1.0}, {0.9, 2.0}});
  SimResult res = simulate(inst);
  std::istringstream csv(trace_csv(res));
  std::string line;
  ASSERT_TRUE(std::getline(csv, line));
  EXPECT_EQ(line, "t,robot_id,x,heading,has_message,event_type");
  int rows = 0;
  bool saw_handover_row = false;
  while (std::getline(csv, line)) {
    ++rows;
    if (line.find("handover") != std::string::npos) saw_handover_row = true;
  }
  int expected = 0;
  for (const SimEvent& ev : res.events) expected += ev.robot_b >= 0 ? 2 : 1;
  EXPECT_EQ(rows, expected);
  EXPECT_TRUE(saw_handover_row);
}

}  // namespace
}  // namespace pony
