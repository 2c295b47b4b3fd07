#pragma once

#include <cstdint>

#include "ponyexpress/types.hpp"

namespace pony {

// n robots with distinct positions drawn uniformly from the variant domain
// and speeds uniform in [speed_lo, speed_hi]. Deterministic in `seed`;
// ids are 0..n-1 in draw order.
ProblemInstance gen_random(Variant variant, int n, std::uint64_t seed,
                           double speed_lo = 0.1, double speed_hi = 2.0);

// Two-robot half-broadcast instance {(0, 1/2), (-1, 1)} whose online/offline
// ratio meets the 3/2 bound exactly.
ProblemInstance gen_hb_adversary();

// Two-robot broadcast family {(0, 1), ((1+y)/2, (1-y)/2)} for y in [0, 1/2].
// Its offline optimum is (5+y)/(3-y) with a handover balanced at the natural
// meeting point; y = 0 attains the 9/5 online/offline bound.
ProblemInstance gen_bc_adversary(double y);

}  // namespace pony
