#pragma once

#include "ponyexpress/types.hpp"
#include "ponyexpress/validate.hpp"

namespace pony {

// Best delivery time to endpoint d (+1 or -1) using robots that start on
// that side of the source, plus at most one robot recruited from the
// opposite side.  Recruiting l keeps only same-side robots at least as
// fast as l (slower ones can never take the message off l's hands).
// Returns +inf when no robot can serve the direction.  `out`, when given,
// receives the winning relay chain in signed coordinates.
double direction_time(const ValidatedInstance& inst, int d,
                      Chain* out = nullptr);

// Exact Half-Broadcast solver: the faster of the two directions; ties
// prefer +1.  The result records the served endpoint's time, direction
// and relay chain.
SolveResult solve_half_broadcast(const ValidatedInstance& inst);

}  // namespace pony
