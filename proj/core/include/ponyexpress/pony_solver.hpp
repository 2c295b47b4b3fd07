#pragma once

#include "ponyexpress/types.hpp"
#include "ponyexpress/validate.hpp"

namespace pony {

// Optimal delivery time from 0 to 1 plus the full handover chain, via a
// priority-queue sweep over a position-sorted doubly linked list.
// O(n log n): every queue pop permanently retires one list node.
SolveResult solve_pony(const ValidatedInstance& inst);

}  // namespace pony
