#pragma once

#include <functional>
#include <utility>

#include "ponyexpress/types.hpp"
#include "ponyexpress/validate.hpp"

namespace pony {

// One candidate strategy: crossing robot l picks up at the source, carries
// to position m, hands a copy over there (receiver_id = a robot, or
// kEndpointPos / kEndpointNeg when l walks the copy to the endpoint
// itself), then turns around and rejoins its home side.  l_id == kSource
// marks the no-crossing strategy (each side served independently).
struct SplitPlan {
  int l_id = kSource;
  int receiver_id = kSource;
  double m = 0.0;          // handover position, signed
  double t = 0.0;          // handover time = (|p(l)| + |m|) / v(l)
  double left_time = kInf;    // delivery time at -1
  double right_time = kInf;   // delivery time at +1
};

// max over the two endpoints of each side delivering alone; robots at
// p = 0 count toward the positive side, robots with p < 0 toward the
// negative side.  +inf when either side has no robot.
double no_crossing_time(const ValidatedInstance& inst);

// Range of handover positions where carrier l can physically meet
// receiver r.  Both arguments are taken by value so virtual endpoint
// receivers (p = +-1, v = 0) can be passed directly; l and r must start
// on opposite sides (p = 0 counts as either).  The interval is signed and
// lies between 0 and the endpoint on r's side.  Lower limit: the head-on
// meeting of l (through the source) with r walking inward.  Upper limit:
// the position where l, if faster, could still catch r walking outward;
// a receiver at least as fast as l pins the interval to the lower limit.
std::pair<double, double> feasible_m_interval(const Robot& l, const Robot& r);

// Evaluates the plan (l, receiver, m): the receiving side becomes a relay
// with source at m available when l arrives; l's home side becomes a
// relay whose robots exclude l until it returns to the source.  Robot ids
// must exist in the instance (receiver may also be kEndpointPos /
// kEndpointNeg).  Throws InfeasibleM when m lies outside the pair's
// feasible interval.  Optional out-params receive the two relay chains
// (signed coordinates, source pickup through endpoint arrival).
SplitPlan eval_split(const ValidatedInstance& inst, int l_id, int receiver_id,
                     double m, Chain* pos_chain = nullptr,
                     Chain* neg_chain = nullptr);

// Ternary search for the minimum of a bitonic f over [lo, hi], refined
// until the bracket is narrower than tol; returns the best point ever
// sampled (a fixed coarse prescan plus both endpoints guard against mild
// non-bitonicity).  Shrinking tol never worsens the result.
std::pair<double, double> unimodal_min(const std::function<double(double)>& f,
                                       double lo, double hi, double tol);

// Broadcast solver: minimizes over the no-crossing strategy and all
// (l, receiver) splits with m searched over the feasible interval.  The
// returned objective is within additive eps of the best strategy in this
// family.  chains[0] relays to +1, chains[1] to -1; `plan`, when given,
// receives the winning strategy.
SolveResult solve_broadcast(const ValidatedInstance& inst, double eps,
                            SplitPlan* plan = nullptr);

}  // namespace pony
