#include "ponyexpress/online_sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "ponyexpress/error.hpp"
#include "ponyexpress/serialize.hpp"

namespace pony {

const char* to_string(EventType t) {
  switch (t) {
    case EventType::kSourcePickup: return "source_pickup";
    case EventType::kMeeting: return "meeting";
    case EventType::kHandover: return "handover";
    case EventType::kEndpointHit: return "endpoint_hit";
    case EventType::kTurnaround: return "turnaround";
  }
  return "?";
}

SimState make_initial_state(const ValidatedInstance& inst) {
  SimState state;
  state.variant = inst.variant();
  state.robots.reserve(inst.robots().size());
  for (const Robot& r : inst.robots()) {
    SimRobot s;
    s.id = r.id;
    s.v = r.v;
    s.original_p = r.p;
    s.x = r.p;
    s.heading = r.p > 0.0 ? -1 : (r.p < 0.0 ? 1 : 0);  // walk toward 0
    state.robots.push_back(s);
  }
  return state;
}

namespace {

int type_rank(EventType t) {
  switch (t) {
    case EventType::kSourcePickup: return 0;
    case EventType::kMeeting: return 1;
    default: return 2;  // endpoint hit
  }
}

bool event_before(const SimEvent& a, const SimEvent& b) {
  if (a.t != b.t) return a.t < b.t;
  const int ra = type_rank(a.type), rb = type_rank(b.type);
  if (ra != rb) return ra < rb;
  if (a.robot_a != b.robot_a) return a.robot_a < b.robot_a;
  return a.robot_b < b.robot_b;
}

bool handover_eligible(const SimRobot& a, const SimRobot& b) {
  if (a.has_message == b.has_message) return false;
  const SimRobot& giver = a.has_message ? a : b;
  const SimRobot& recv = a.has_message ? b : a;
  return recv.v > giver.v;
}

}  // namespace

SimEvent next_event(const SimState& state) {
  const double now = state.now;
  bool found = false;
  SimEvent best;
  auto consider = [&](const SimEvent& ev) {
    if (!found || event_before(ev, best)) {
      best = ev;
      found = true;
    }
  };
  const int n = static_cast<int>(state.robots.size());
  for (int i = 0; i < n; ++i) {
    const SimRobot& r = state.robots[static_cast<std::size_t>(i)];
    if (!r.has_message) {
      // Non-carriers head for the source unconditionally.
      consider({now + std::abs(r.x) / r.v, EventType::kSourcePickup, r.id, -1,
                0.0});
    } else if (r.heading != 0) {
      const double endpoint = r.heading > 0 ? 1.0 : -1.0;
      consider({now + (endpoint - r.x) * r.heading / r.v,
                EventType::kEndpointHit, r.id, -1, endpoint});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const SimRobot& a = state.robots[static_cast<std::size_t>(i)];
      const SimRobot& b = state.robots[static_cast<std::size_t>(j)];
      if (a.x == b.x) {
        // Contact right now only matters if a transfer would fire;
        // otherwise the pair separates (or travels together) eventless.
        if (handover_eligible(a, b)) {
          consider({now, EventType::kMeeting, std::min(a.id, b.id),
                    std::max(a.id, b.id), a.x});
        }
        continue;
      }
      const double rel = a.heading * a.v - b.heading * b.v;
      const double gap = b.x - a.x;  // sign-aware closing test
      if (rel == 0.0) continue;
      const double dt = gap / rel;
      if (dt <= 0.0) continue;
      consider({now + dt, EventType::kMeeting, std::min(a.id, b.id),
                std::max(a.id, b.id), a.x + a.heading * a.v * dt});
    }
  }
  if (!found) fail(Errc::kNoEvent, "no robot can generate another event");
  return best;
}

namespace {

struct Sim {
  SimState state;
  SimResult result;
  std::unordered_map<int, int> index_of;
  double horizon = kInf;

  explicit Sim(const ValidatedInstance& inst, const SimConfig& cfg)
      : state(make_initial_state(inst)) {
    double max_abs_p = 0.0, min_v = kInf;
    for (const SimRobot& r : state.robots) {
      max_abs_p = std::max(max_abs_p, std::abs(r.original_p));
      min_v = std::min(min_v, r.v);
      index_of[r.id] = static_cast<int>(result.robot_ids.size());
      result.robot_ids.push_back(r.id);
    }
    // A lone slowest robot can broadcast by itself within (3 + max|p|)/min v,
    // so equality is a legitimate finishing time; the relative slack keeps
    // such runs from tripping the guard on rounding drift.
    horizon = cfg.horizon.value_or((3.0 + max_abs_p) / min_v);
    horizon = horizon * (1.0 + 1e-9) + 1e-9;
    result.trajectories.resize(state.robots.size());
    record_positions();
  }

  SimRobot& robot(int id) {
    return state.robots[static_cast<std::size_t>(index_of.at(id))];
  }

  void record_positions() {
    for (std::size_t i = 0; i < state.robots.size(); ++i) {
      result.trajectories[i].push_back({state.now, state.robots[i].x});
    }
  }

  void advance_to(double t) {
    for (SimRobot& r : state.robots) r.x += r.heading * r.v * (t - state.now);
    state.now = t;
  }

  void log(EventType type, int a, int b, double x) {
    SimEvent ev{state.now, type, a, b, x};
    const SimRobot& ra = robot(a);
    ev.heading_a = ra.heading;
    ev.has_message_a = ra.has_message;
    if (b >= 0) {
      const SimRobot& rb = robot(b);
      ev.heading_b = rb.heading;
      ev.has_message_b = rb.has_message;
    }
    result.events.push_back(ev);
  }

  int pickup_heading(const SimRobot& r) const {
    if (state.variant == Variant::kPony) return 1;
    return r.original_p < 0.0 ? -1 : 1;  // p = 0 breaks toward +1
  }

  bool done() const {
    switch (state.variant) {
      case Variant::kPony: return state.delivered_pos;
      case Variant::kHalfBroadcast:
        return state.delivered_pos || state.delivered_neg;
      case Variant::kBroadcast:
        return state.delivered_pos && state.delivered_neg;
    }
    return true;
  }

  void handle_pickup(const SimEvent& ev) {
    SimRobot& r = robot(ev.robot_a);
    r.x = 0.0;
    r.has_message = true;
    r.heading = pickup_heading(r);
    log(EventType::kSourcePickup, r.id, -1, 0.0);
  }

  void handle_meeting(const SimEvent& ev) {
    SimRobot& a = robot(ev.robot_a);
    SimRobot& b = robot(ev.robot_b);
    a.x = b.x = ev.x;
    if (!handover_eligible(a, b)) {
      log(EventType::kMeeting, a.id, b.id, ev.x);
      return;
    }
    SimRobot& giver = a.has_message ? a : b;
    SimRobot& recv = a.has_message ? b : a;
    recv.has_message = true;
    if (state.variant == Variant::kPony) {
      recv.heading = 1;
    } else if (ev.x != 0.0) {
      recv.heading = ev.x > 0.0 ? 1 : -1;  // nearest endpoint to the meeting
    } else {
      recv.heading = giver.heading;  // meeting exactly at the source
    }
    if (state.variant == Variant::kBroadcast) giver.heading = -giver.heading;
    log(EventType::kHandover, giver.id, recv.id, ev.x);
  }

  void handle_endpoint(const SimEvent& ev) {
    SimRobot& r = robot(ev.robot_a);
    r.x = ev.x;
    if (ev.x > 0.0) {
      if (!state.delivered_pos) {
        state.delivered_pos = true;
        result.time_pos = state.now;
      }
    } else if (!state.delivered_neg) {
      state.delivered_neg = true;
      result.time_neg = state.now;
    }
    log(EventType::kEndpointHit, r.id, -1, ev.x);
    if (state.variant == Variant::kBroadcast && !done()) {
      r.heading = -r.heading;
      log(EventType::kTurnaround, r.id, -1, ev.x);
    }
  }

  void run() {
    while (!done()) {
      SimEvent ev;
      try {
        ev = next_event(state);
      } catch (const Error& e) {
        if (e.code() == Errc::kNoEvent) {
          fail(Errc::kSimulationHorizonExceeded, "all robots halted");
        }
        throw;
      }
      if (ev.t > horizon) {
        fail(Errc::kSimulationHorizonExceeded,
             "no delivery by t=" + std::to_string(horizon));
      }
      advance_to(ev.t);
      switch (ev.type) {
        case EventType::kSourcePickup: handle_pickup(ev); break;
        case EventType::kMeeting: handle_meeting(ev); break;
        default: handle_endpoint(ev); break;
      }
      record_positions();
    }
    switch (state.variant) {
      case Variant::kPony:
        result.objective = *result.time_pos;
        break;
      case Variant::kHalfBroadcast:
        result.objective =
            state.delivered_pos ? *result.time_pos : *result.time_neg;
        break;
      case Variant::kBroadcast:
        result.objective = std::max(*result.time_pos, *result.time_neg);
        break;
    }
  }
};

}  // namespace

SimResult simulate(const ValidatedInstance& inst, const SimConfig& cfg) {
  Sim sim(inst, cfg);
  sim.run();
  return sim.result;
}

std::string trace_csv(const SimResult& result) {
  std::ostringstream out;
  out << "t,robot_id,x,heading,has_message,event_type\n";
  auto row = [&](const SimEvent& ev, int id, int heading, bool carries) {
    out << format_sig12(ev.t) << ',' << id << ',' << format_sig12(ev.x) << ','
        << heading << ',' << (carries ? 1 : 0) << ',' << to_string(ev.type)
        << '\n';
  };
  for (const SimEvent& ev : result.events) {
    row(ev, ev.robot_a, ev.heading_a, ev.has_message_a);
    if (ev.robot_b >= 0) row(ev, ev.robot_b, ev.heading_b, ev.has_message_b);
  }
  return out.str();
}

}  // namespace pony
