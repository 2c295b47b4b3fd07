#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ponyexpress/types.hpp"
#include "ponyexpress/validate.hpp"

namespace pony {

// Upper bound claimed for the online protocol's competitive ratio per
// variant: 1 (pony), 3/2 (half-broadcast), 9/5 (broadcast).
double ratio_bound(Variant v);

// FNV-1a 64-bit digest of the canonical JSON serialization, as 16 hex
// digits. Stable across runs, used to identify instances in reports.
std::string instance_digest(const ValidatedInstance& inst);

// The variant's offline optimum (broadcast searched with eps = 1e-9, small
// enough to be negligible against every ratio tolerance used here).
double offline_objective(const ValidatedInstance& inst);

// simulate(inst).objective divided by offline_objective(inst).
double competitive_ratio(const ValidatedInstance& inst);

struct RatioRow {
  int index = 0;          // trial number, 0-based
  std::string digest;     // instance_digest of the trial instance
  int n = 0;              // robot count of the trial instance
  double online = 0.0;    // simulated protocol delivery time
  double offline = 0.0;   // offline optimum (broadcast: eps = 1e-9)
  double ratio = 0.0;
  bool violation = false;    // ratio > bound + tol
  bool below_unity = false;  // ratio < 1 - 1e-9 (should never happen)
};

struct RatioReport {
  Variant variant = Variant::kPony;
  double bound = 0.0;  // ratio_bound(variant)
  double tol = 0.0;    // violation slack actually used
  std::uint64_t seed = 0;
  std::vector<RatioRow> rows;        // one per trial, in trial order
  double max_ratio = 0.0;            // equals the row-wise maximum
  int max_index = -1;                // trial attaining max_ratio
  std::vector<int> violations;       // indices of rows flagged
};

// Runs competitive_ratio over `trials` random instances whose sizes are
// drawn uniformly from [1, n] and whose robots come from gen_random with
// per-trial sub-seeds derived from `seed`. Deterministic in all arguments.
RatioReport sweep(Variant variant, int n, int trials, std::uint64_t seed,
                  double speed_lo = 0.1, double speed_hi = 2.0,
                  double tol = 1e-6);

// One sample of the two-robot broadcast adversary family, parametrized by
// y in [0, 1/2] (robots (0, 1) and ((1+y)/2, (1-y)/2)).
struct LbRow {
  double y = 0.0;
  double online = 0.0;     // adversary argument's floor for ANY online
                           // protocol on this instance: 3 + 2y
  double simulated = 0.0;  // what the fixed online protocol actually takes
  double offline = 0.0;    // solve_broadcast(.., 1e-9); exact: (5+y)/(3-y)
  double ratio = 0.0;      // online / offline
};

struct LbReport {
  std::vector<LbRow> rows;  // y evenly spaced over [0, 1/2]
  double min_ratio = 0.0;
  double argmin_y = 0.0;
};

// Evaluates the adversary family at `samples` evenly spaced y values.
// The ratio column floors the competitive ratio of every online protocol
// at (3+2y)(3-y)/(5+y), minimized at y = 0 with value 9/5. The
// `simulated` column is reported for comparison; it coincides with the
// floor at y = 0 and stays at 3 for larger y (the floor binds protocols
// tailored per-instance by the adversary, not this fixed one).
LbReport lb_family_sweep(int samples);

}  // namespace pony
