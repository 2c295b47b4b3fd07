#include "ponyexpress/hb_solver.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "ponyexpress/error.hpp"
#include "ponyexpress/pony_solver.hpp"

namespace pony {

namespace {

// Runs solve_pony on a candidate robot set (positions already mapped into
// [0, 1]).  Returns +inf for an empty set.
double pony_value(std::vector<Robot> robots, Chain* chain) {
  if (robots.empty()) return kInf;
  SolveResult r = solve_pony(validate({Variant::kPony, std::move(robots)}));
  if (chain && !r.chains.empty()) *chain = std::move(r.chains.front());
  return r.objective;
}

}  // namespace

double direction_time(const ValidatedInstance& inst, int d, Chain* out) {
  if (inst.variant() != Variant::kHalfBroadcast &&
      inst.variant() != Variant::kBroadcast) {
    fail(Errc::kVariantMismatch, "two-sided variant required");
  }
  if (d != 1 && d != -1) fail(Errc::kInvalidRange, "direction must be +-1");

  // Work in the frame where the target endpoint is +1.
  std::vector<Robot> same, opposite;
  for (Robot r : inst.robots()) {
    if (d < 0) r.p = r.p == 0.0 ? 0.0 : -r.p;
    if (r.p >= 0.0) same.push_back(r);
    if (r.p <= 0.0) {
      r.p = -r.p;  // reflected crossing candidate
      opposite.push_back(r);
    }
  }

  double best = kInf;
  Chain best_chain;
  auto try_set = [&](std::vector<Robot> robots) {
    Chain chain;
    const double t = pony_value(std::move(robots), out ? &chain : nullptr);
    if (t < best) {
      best = t;
      best_chain = std::move(chain);
    }
  };

  try_set(same);
  for (const Robot& l : opposite) {
    std::vector<Robot> set{l};
    for (const Robot& w : same) {
      if (w.id != l.id && w.v >= l.v) set.push_back(w);
    }
    try_set(std::move(set));
  }

  if (out && best < kInf) {
    if (d < 0) {
      for (HandoverEvent& e : best_chain) e.x = e.x == 0.0 ? 0.0 : -e.x;
      best_chain.back().receiver = kEndpointNeg;
    }
    *out = std::move(best_chain);
  }
  return best;
}

SolveResult solve_half_broadcast(const ValidatedInstance& inst) {
  if (inst.variant() != Variant::kHalfBroadcast) {
    fail(Errc::kVariantMismatch, "half_broadcast instance required");
  }
  Chain chain_pos, chain_neg;
  const double t_pos = direction_time(inst, 1, &chain_pos);
  const double t_neg = direction_time(inst, -1, &chain_neg);

  SolveResult result;
  if (t_pos <= t_neg) {
    result.objective = t_pos;
    result.time_pos = t_pos;
    result.direction = 1;
    result.chains.push_back(std::move(chain_pos));
  } else {
    result.objective = t_neg;
    result.time_neg = t_neg;
    result.direction = -1;
    result.chains.push_back(std::move(chain_neg));
  }
  return result;
}

}  // namespace pony
