#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ponyexpress/types.hpp"
#include "ponyexpress/validate.hpp"

namespace pony {

// Event kinds, in tie-break priority order for simultaneous events.
// kHandover and kTurnaround never come out of next_event(); the simulator
// assigns them while processing a meeting / endpoint hit.
enum class EventType {
  kSourcePickup,
  kMeeting,
  kHandover,
  kEndpointHit,
  kTurnaround,
};

const char* to_string(EventType t);

// One logged simulation event.  robot_b is -1 for unary events.  For
// handovers robot_a is the giver and robot_b the receiver.  The *_a / *_b
// fields snapshot each participant's state immediately after the event, so
// a trace can be rendered without replaying the run.
struct SimEvent {
  double t = 0.0;
  EventType type = EventType::kMeeting;
  int robot_a = -1;
  int robot_b = -1;
  double x = 0.0;
  int heading_a = 0;
  bool has_message_a = false;
  int heading_b = 0;
  bool has_message_b = false;
};

struct SimRobot {
  int id = 0;
  double v = 0.0;
  double original_p = 0.0;  // start position; decides a carrier's endpoint
  double x = 0.0;
  int heading = 0;  // -1, 0 (parked), +1
  bool has_message = false;
};

struct SimState {
  Variant variant = Variant::kPony;
  double now = 0.0;
  std::vector<SimRobot> robots;
  bool delivered_pos = false;
  bool delivered_neg = false;
};

SimState make_initial_state(const ValidatedInstance& inst);

// Earliest upcoming event under the current headings: source pickups for
// inbound non-carriers, pairwise meetings of strictly closing robots (or
// co-located pairs where a transfer would fire), endpoint hits for
// carriers.  Ties break by (time, event kind, lower robot id).  Returned
// type is one of kSourcePickup / kMeeting / kEndpointHit; only t, type,
// robot ids and x are filled in.  Throws Errc::kNoEvent when nothing is
// pending.
SimEvent next_event(const SimState& state);

struct TrajectoryPoint {
  double t = 0.0;
  double x = 0.0;
};

struct SimResult {
  double objective = kInf;
  std::optional<double> time_pos;  // first delivery at +1 (or 1 for pony)
  std::optional<double> time_neg;  // first delivery at -1
  std::vector<SimEvent> events;
  std::vector<int> robot_ids;  // row i of trajectories belongs to this id
  std::vector<std::vector<TrajectoryPoint>> trajectories;
};

struct SimConfig {
  // Abort threshold; default (3 + max|p|) / min v, beyond which the
  // protocols above are guaranteed to have finished.
  std::optional<double> horizon;
};

// Runs the online protocol for the instance's variant and returns the
// delivery time(s), the event log and piecewise-linear trajectories.
// Throws Errc::kSimulationHorizonExceeded if the run outlives the horizon.
SimResult simulate(const ValidatedInstance& inst, const SimConfig& cfg = {});

// CSV rendering of the event log: one row per (event, participant) with
// the participant's post-event state.
// Columns: t,robot_id,x,heading,has_message,event_type
std::string trace_csv(const SimResult& result);

}  // namespace pony
