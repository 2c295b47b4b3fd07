#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace pony {

inline constexpr double kEps = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Participant markers used in relay chains alongside nonnegative robot ids.
inline constexpr int kSource = -1;       // the message origin at x = 0
inline constexpr int kEndpointPos = -2;  // delivery target at x = +1
inline constexpr int kEndpointNeg = -3;  // delivery target at x = -1

enum class Variant {
  kPony,           // deliver 0 -> 1, robots start in [0, 1]
  kHalfBroadcast,  // deliver 0 -> either endpoint of [-1, 1]
  kBroadcast,      // deliver 0 -> both endpoints of [-1, 1]
};

const char* to_string(Variant v);

struct Robot {
  int id = 0;
  double p = 0.0;  // initial position
  double v = 0.0;  // speed, strictly positive
  // Activation time. User-supplied robots always have release 0; solvers use
  // positive values internally when a robot enters a sub-problem late.
  double release = 0.0;
};

struct ProblemInstance {
  Variant variant = Variant::kPony;
  std::vector<Robot> robots;
};

// One message transfer: `giver` hands a copy to `receiver` at time t, point x.
// Endpoint arrivals are encoded with receiver = kEndpointPos / kEndpointNeg.
struct HandoverEvent {
  double t = 0.0;
  double x = 0.0;
  int giver = kSource;
  int receiver = kSource;
};

using Chain = std::vector<HandoverEvent>;

struct SolveResult {
  double objective = kInf;
  std::optional<double> time_pos;  // delivery time at the positive endpoint
  std::optional<double> time_neg;  // delivery time at the negative endpoint
  std::optional<int> direction;    // half-broadcast: +1 or -1, the served side
  std::vector<Chain> chains;       // one relay chain per delivered endpoint
};

}  // namespace pony
