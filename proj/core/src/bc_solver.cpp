#include "ponyexpress/bc_solver.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "ponyexpress/error.hpp"
#include "ponyexpress/gpe.hpp"
#include "ponyexpress/pony_solver.hpp"

namespace pony {

namespace {

double flip0(double x) { return x == 0.0 ? 0.0 : -x; }

std::vector<Robot> reflected_robots(const std::vector<Robot>& robots) {
  std::vector<Robot> out = robots;
  for (Robot& r : out) r.p = flip0(r.p);
  return out;
}

void flip_chain(Chain& chain) {
  for (HandoverEvent& e : chain) {
    e.x = flip0(e.x);
    if (e.receiver == kEndpointPos) {
      e.receiver = kEndpointNeg;
    } else if (e.receiver == kEndpointNeg) {
      e.receiver = kEndpointPos;
    }
  }
}

// Relay time for one side alone, positions already mapped into [0, 1].
double side_time(std::vector<Robot> robots, Chain* chain) {
  if (robots.empty()) return kInf;
  SolveResult r = solve_pony(validate({Variant::kPony, std::move(robots)}));
  if (chain && !r.chains.empty()) *chain = std::move(r.chains.front());
  return r.objective;
}

// --- left-origin core ------------------------------------------------
// All helpers below assume the crossing robot starts at p <= 0 and hands
// over at m in [0, 1]; solve_broadcast reflects the instance to reuse
// them for right-origin crossers.

std::pair<double, double> interval_core(const Robot& l, const Robot& r) {
  if (r.v == 0.0) return {1.0, 1.0};  // endpoint receiver: carry all the way
  const double x_star = (l.v * r.p + r.v * l.p) / (l.v + r.v);
  const double m_lo = std::clamp(x_star, 0.0, 1.0);
  double m_hi = m_lo;
  if (l.v > r.v) {
    const double x_catch = (l.v * r.p - r.v * l.p) / (l.v - r.v);
    m_hi = std::max(m_lo, std::min(1.0, x_catch));
  }
  return {m_lo, m_hi};
}

struct CoreEval {
  double t = 0.0;
  double right_time = kInf;  // delivery at +1 (this frame)
  double left_time = kInf;   // delivery at -1 (this frame)
  Chain right_chain;
  Chain left_chain;  // signed (negative x) coordinates
};

CoreEval eval_core(const std::vector<Robot>& robots, const Robot& l, double m,
                   bool want_chains) {
  CoreEval out;
  out.t = (std::abs(l.p) + m) / l.v;

  GpeInstance right;
  right.source_pos = m;
  right.source_time = out.t;
  right.dest_pos = 1.0;
  for (const Robot& r : robots) {
    if (r.id == l.id || r.p < 0.0) continue;
    if (r.p >= m) {
      right.robots.push_back({r.id, r.p - m, r.v, 0.0});
    } else {
      right.robots.push_back({r.id, 0.0, r.v, (m - r.p) / r.v});
    }
  }
  SolveResult right_res = solve_gpe(right);
  out.right_time = right_res.objective;

  GpeInstance left;
  left.source_pos = 0.0;
  left.source_time = 0.0;
  left.dest_pos = 1.0;
  for (const Robot& r : robots) {
    if (r.id != l.id && r.p < 0.0) left.robots.push_back({r.id, -r.p, r.v, 0.0});
  }
  left.robots.push_back({l.id, 0.0, l.v, out.t + m / l.v});
  SolveResult left_res = solve_gpe(left);
  out.left_time = left_res.objective;

  if (want_chains) {
    const double t_source = std::abs(l.p) / l.v;
    if (!right_res.chains.empty()) {
      out.right_chain = std::move(right_res.chains.front());
      HandoverEvent& first = out.right_chain.front();
      if (first.giver == kSource &&
          std::abs(first.t - out.t) <= 1e-9 * (1.0 + std::abs(out.t))) {
        // The first pickup at m is the physical handover from l.
        first.giver = l.id;
        out.right_chain.insert(out.right_chain.begin(),
                               {t_source, 0.0, kSource, l.id});
      }
    } else {
      // Degenerate m == 1: l walks the copy to the endpoint itself.
      out.right_chain = {{t_source, 0.0, kSource, l.id},
                         {out.t, 1.0, l.id, kEndpointPos}};
    }
    if (!left_res.chains.empty()) {
      out.left_chain = std::move(left_res.chains.front());
      flip_chain(out.left_chain);
    }
  }
  return out;
}

struct Winner {
  double value = kInf;
  int frame = 1;       // +1 = original orientation, -1 = reflected
  bool split = false;  // false = no-crossing strategy
  int l_id = kSource;
  int receiver_id = kSource;  // kEndpointPos = virtual (frame coordinates)
  double m = 0.0;
};

}  // namespace

double no_crossing_time(const ValidatedInstance& inst) {
  std::vector<Robot> left, right;
  for (Robot r : inst.robots()) {
    if (r.p < 0.0) {
      r.p = -r.p;
      left.push_back(r);
    } else {
      right.push_back(r);
    }
  }
  return std::max(side_time(std::move(left), nullptr),
                  side_time(std::move(right), nullptr));
}

std::pair<double, double> feasible_m_interval(const Robot& l, const Robot& r) {
  const bool mirrored = l.p > 0.0;
  Robot lc = l, rc = r;
  if (mirrored) {
    lc.p = flip0(lc.p);
    rc.p = flip0(rc.p);
  }
  if (rc.v == 0.0 ? rc.p != 1.0 : rc.p < 0.0) {
    fail(Errc::kInvalidRange, "receiver must oppose the crossing robot");
  }
  auto [lo, hi] = interval_core(lc, rc);
  if (mirrored) return {-hi, -lo};
  return {lo, hi};
}

std::pair<double, double> unimodal_min(const std::function<double(double)>& f,
                                       double lo, double hi, double tol) {
  if (!(lo <= hi)) fail(Errc::kInvalidRange, "empty search interval");
  double best_x = lo;
  double best_f = f(lo);
  auto probe = [&](double x) {
    const double y = f(x);
    if (y < best_f) {
      best_f = y;
      best_x = x;
    }
    return y;
  };
  if (hi > lo) {
    probe(hi);
    for (int k = 1; k <= 17; ++k) {
      probe(lo + (hi - lo) * (k / 18.0));
    }
    double a = lo, b = hi;
    for (int iter = 0; b - a > tol && iter < 200; ++iter) {
      const double m1 = a + (b - a) / 3.0;
      const double m2 = b - (b - a) / 3.0;
      if (probe(m1) <= probe(m2)) {
        b = m2;
      } else {
        a = m1;
      }
    }
    probe(0.5 * (a + b));
  }
  return {best_x, best_f};
}

SplitPlan eval_split(const ValidatedInstance& inst, int l_id, int receiver_id,
                     double m, Chain* pos_chain, Chain* neg_chain) {
  const Robot* l = nullptr;
  const Robot* receiver = nullptr;
  for (const Robot& r : inst.robots()) {
    if (r.id == l_id) l = &r;
    if (r.id == receiver_id) receiver = &r;
  }
  if (!l) fail(Errc::kInvalidRange, "unknown crossing robot id");
  const bool mirrored = l->p > 0.0;
  const bool virt = receiver_id == kEndpointPos || receiver_id == kEndpointNeg;
  if (virt) {
    if (receiver_id != (mirrored ? kEndpointNeg : kEndpointPos)) {
      fail(Errc::kInvalidRange, "virtual receiver on the crosser's own side");
    }
  } else if (!receiver || receiver_id == l_id) {
    fail(Errc::kInvalidRange, "unknown receiver id");
  } else if (mirrored ? receiver->p > 0.0 : receiver->p < 0.0) {
    fail(Errc::kInvalidRange, "receiver must oppose the crossing robot");
  }

  std::vector<Robot> framed =
      mirrored ? reflected_robots(inst.robots()) : inst.robots();
  Robot lc = *l;
  Robot rc = virt ? Robot{kEndpointPos, 1.0, 0.0, 0.0} : *receiver;
  if (mirrored) {
    lc.p = flip0(lc.p);
    if (!virt) rc.p = flip0(rc.p);
  }
  double mc = mirrored ? flip0(m) : m;
  const auto [lo, hi] = interval_core(lc, rc);
  if (mc < lo - 1e-12 || mc > hi + 1e-12) {
    fail(Errc::kInfeasibleM, "handover position outside feasible interval");
  }
  mc = std::clamp(mc, lo, hi);

  CoreEval core = eval_core(framed, lc, mc, pos_chain || neg_chain);
  SplitPlan plan;
  plan.l_id = l_id;
  plan.receiver_id = receiver_id;
  plan.m = mirrored ? flip0(mc) : mc;
  plan.t = core.t;
  if (mirrored) {
    plan.right_time = core.left_time;
    plan.left_time = core.right_time;
    flip_chain(core.right_chain);
    flip_chain(core.left_chain);
    if (pos_chain) *pos_chain = std::move(core.left_chain);
    if (neg_chain) *neg_chain = std::move(core.right_chain);
  } else {
    plan.right_time = core.right_time;
    plan.left_time = core.left_time;
    if (pos_chain) *pos_chain = std::move(core.right_chain);
    if (neg_chain) *neg_chain = std::move(core.left_chain);
  }
  return plan;
}

SolveResult solve_broadcast(const ValidatedInstance& inst, double eps,
                            SplitPlan* plan) {
  if (inst.variant() != Variant::kBroadcast) {
    fail(Errc::kVariantMismatch, "broadcast instance required");
  }
  if (!(eps > 0.0)) fail(Errc::kEpsNonPositive, "eps must be > 0");

  double v_min = kInf;
  for (const Robot& r : inst.robots()) v_min = std::min(v_min, r.v);
  const double tol = eps * v_min / 3.0;

  Winner best;
  for (int frame : {1, -1}) {
    std::vector<Robot> framed =
        frame == 1 ? inst.robots() : reflected_robots(inst.robots());

    std::vector<Robot> left, right;
    for (Robot r : framed) {
      if (r.p < 0.0) {
        r.p = -r.p;
        left.push_back(r);
      } else {
        right.push_back(r);
      }
    }
    const double nc = std::max(side_time(left, nullptr),
                               side_time(right, nullptr));
    if (nc < best.value) {
      best = {nc, frame, false, kSource, kSource, 0.0};
    }

    std::vector<Robot> crossers, receivers;
    for (const Robot& r : framed) {
      if (r.p <= 0.0) crossers.push_back(r);
      if (r.p >= 0.0) receivers.push_back(r);
    }
    auto by_id = [](const Robot& a, const Robot& b) { return a.id < b.id; };
    std::sort(crossers.begin(), crossers.end(), by_id);
    std::sort(receivers.begin(), receivers.end(), by_id);

    for (const Robot& l : crossers) {
      std::vector<Robot> cands{Robot{kEndpointPos, 1.0, 0.0, 0.0}};
      for (const Robot& r : receivers) {
        if (r.id != l.id) cands.push_back(r);
      }
      for (const Robot& r : cands) {
        const auto [lo, hi] = interval_core(l, r);
        auto f = [&](double m) {
          const CoreEval e = eval_core(framed, l, m, false);
          return std::max(e.right_time, e.left_time);
        };
        const auto [m_star, val] = unimodal_min(f, lo, hi, tol);
        if (val < best.value) {
          best = {val, frame, true, l.id, r.id, m_star};
        }
      }
    }
  }

  // Rebuild the winning strategy with chains, then map back to the
  // original orientation.
  SolveResult result;
  SplitPlan won;
  Chain frame_pos, frame_neg;
  std::vector<Robot> framed =
      best.frame == 1 ? inst.robots() : reflected_robots(inst.robots());
  if (!best.split) {
    std::vector<Robot> left, right;
    for (Robot r : framed) {
      if (r.p < 0.0) {
        r.p = -r.p;
        left.push_back(r);
      } else {
        right.push_back(r);
      }
    }
    won.right_time = side_time(std::move(right), &frame_pos);
    won.left_time = side_time(std::move(left), &frame_neg);
    flip_chain(frame_neg);
  } else {
    const Robot* l = nullptr;
    for (const Robot& r : framed) {
      if (r.id == best.l_id) l = &r;
    }
    CoreEval core = eval_core(framed, *l, best.m, true);
    won.l_id = best.l_id;
    won.receiver_id = best.receiver_id;
    won.m = best.m;
    won.t = core.t;
    won.right_time = core.right_time;
    won.left_time = core.left_time;
    frame_pos = std::move(core.right_chain);
    frame_neg = std::move(core.left_chain);
  }

  if (best.frame == -1) {
    std::swap(won.right_time, won.left_time);
    std::swap(frame_pos, frame_neg);
    flip_chain(frame_pos);
    flip_chain(frame_neg);
    won.m = flip0(won.m);
    if (won.receiver_id == kEndpointPos) won.receiver_id = kEndpointNeg;
  }

  result.objective = std::max(won.right_time, won.left_time);
  result.time_pos = won.right_time;
  result.time_neg = won.left_time;
  result.chains.push_back(std::move(frame_pos));
  result.chains.push_back(std::move(frame_neg));
  if (plan) *plan = won;
  return result;
}

}  // namespace pony
