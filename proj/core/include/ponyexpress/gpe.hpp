#pragma once

#include <vector>

#include "ponyexpress/types.hpp"

namespace pony {

// Relay sub-problem on a half-line.  The message appears at source_pos no
// earlier than source_time; robots sit at nonnegative offsets from the
// source and may activate late; deliver to dest_pos on the far side.
struct GpeRobot {
  int id = 0;
  double q = 0.0;        // distance from the source, >= 0
  double v = 0.0;        // speed, > 0
  double release = 0.0;  // absolute activation time, >= 0
};

struct GpeInstance {
  double source_pos = 0.0;
  double source_time = 0.0;
  double dest_pos = 1.0;  // >= source_pos
  std::vector<GpeRobot> robots;
};

// Greedy relay: an inactive robot is absent until its release, then walks
// toward the source; a robot arriving before source_time waits there;
// every arrival picks up a copy and turns toward dest_pos; a carrier hands
// a copy to any strictly faster inbound robot on contact.  Objective is
// the earliest carrier arrival at dest_pos (absolute time) plus the
// winning relay chain, with absolute x coordinates.  Degenerate cases:
// dest_pos == source_pos yields source_time; an empty robot set yields an
// unreachable result (objective +inf) rather than an error.
SolveResult solve_gpe(const GpeInstance& g);

}  // namespace pony
