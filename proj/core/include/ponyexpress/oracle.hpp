#pragma once

#include <vector>

#include "ponyexpress/validate.hpp"

namespace pony {

// Chain-evaluation robot for the brute solvers. Positions are signed and
// relative to the source; the message is available at the source (x = 0)
// from source_time on and must reach dest > 0. A robot moves toward the
// source from its release time, picks up a copy (waiting at the source if
// it arrives early), or receives one mid-route, then carries toward dest.
struct LineRobot {
  int id = 0;
  double p = 0.0;
  double v = 0.0;
  double release = 0.0;
};

// Delivery time when the message is relayed along `chain` in order; +inf when
// some link cannot physically occur. Exact closed-form kinematics per link:
// head-on when the successor starts ahead of the carrier, catch-up through
// the source when it starts behind (p < 0).
double chain_time(const std::vector<LineRobot>& chain, double source_time,
                  double dest);

// Min of chain_time over relay chains drawn from `robots`. With
// increasing_only, chains are the strictly-speed-increasing ordered subsets
// (the set fixes the order); otherwise every permutation of every subset is
// tried (debug mode for validating that pruning loses nothing).
double brute_line(const std::vector<LineRobot>& robots, double source_time,
                  double dest, bool increasing_only = true);

// Exact reference solvers for small instances.
double brute_pony(const ValidatedInstance& inst, bool increasing_only = true);
double brute_hb(const ValidatedInstance& inst);
double brute_broadcast(const ValidatedInstance& inst, int grid);

// Closed-form two-robot optima from first principles (case analysis plus a
// one-dimensional minimization over the handover point).
double two_robot_hb(const Robot& r, const Robot& r2);
double two_robot_broadcast(const Robot& r, const Robot& r2);

}  // namespace pony
