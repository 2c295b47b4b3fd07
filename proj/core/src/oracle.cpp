#include "ponyexpress/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ponyexpress/error.hpp"

namespace pony {

namespace {

// Current message front: a carrier whose rightward trajectory is v*(t - T);
// t_prev is the time of the link that created it (physicality floor).
struct FrontState {
  double v = 0.0;
  double T = 0.0;
  double t_prev = 0.0;
};

bool advance_front(FrontState& f, const LineRobot& s, double source_time,
                   bool first) {
  if (first) {
    const double T = std::max(source_time, s.release + std::abs(s.p) / s.v);
    f = {s.v, T, T};
    return true;
  }
  double t_link = kInf;
  if (s.p >= 0.0) {
    // Successor moves left from p toward the source; the lines cross at
    // t*. t* < release means the pair diverges for the successor's whole
    // active life. A crossing before the front's zero-crossing time T is
    // the wait-at-source case: acquiring at (0, T) is never better than
    // the successor's own subchain, so the clamped value is a safe bound.
    const double tstar =
        (s.p + s.v * s.release + f.v * f.T) / (s.v + f.v);
    if (tstar < s.release) return false;
    t_link = std::max(f.T, tstar);
  } else {
    // Successor starts behind the source and chases the front through 0.
    if (s.v <= f.v) return false;
    const double tc =
        (-s.p + s.v * s.release - f.v * f.T) / (s.v - f.v);
    if (tc < s.release) return false;
    t_link = tc;
  }
  if (t_link < f.t_prev) return false;  // crossing predates the front
  const double x = f.v * (t_link - f.T);
  f.T = t_link - x / s.v;
  f.v = s.v;
  f.t_prev = t_link;
  return true;
}

double finish(const FrontState& f, double dest) { return f.T + dest / f.v; }

bool line_robot_speed_order(const LineRobot& a, const LineRobot& b) {
  if (a.v != b.v) return a.v < b.v;
  return a.id < b.id;
}

// Min over strictly-speed-increasing subsets of a speed-sorted array.
double best_over_masks(const LineRobot* a, int k, double source_time,
                       double dest) {
  double best = kInf;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    FrontState f;
    bool ok = true;
    bool first = true;
    double last_v = -1.0;
    for (int i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (!first && !(a[i].v > last_v)) {
        ok = false;
        break;
      }
      if (!advance_front(f, a[i], source_time, first)) {
        ok = false;
        break;
      }
      last_v = a[i].v;
      first = false;
    }
    if (ok) best = std::min(best, finish(f, dest));
  }
  return best;
}

}  // namespace

double chain_time(const std::vector<LineRobot>& chain, double source_time,
                  double dest) {
  if (dest <= 0.0) return source_time;
  FrontState f;
  bool first = true;
  for (const LineRobot& s : chain) {
    if (!advance_front(f, s, source_time, first)) return kInf;
    first = false;
  }
  if (first) return kInf;  // empty chain, positive distance
  return finish(f, dest);
}

double brute_line(const std::vector<LineRobot>& robots, double source_time,
                  double dest, bool increasing_only) {
  if (dest <= 0.0) return source_time;
  const int n = static_cast<int>(robots.size());
  if (n > 20) fail(Errc::kTooLarge, "brute_line supports at most 20 robots");
  if (increasing_only) {
    std::vector<LineRobot> sorted = robots;
    std::sort(sorted.begin(), sorted.end(), line_robot_speed_order);
    return best_over_masks(sorted.data(), n, source_time, dest);
  }
  double best = kInf;
  std::vector<LineRobot> subset;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    subset.clear();
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) subset.push_back(robots[static_cast<std::size_t>(i)]);
    }
    std::sort(subset.begin(), subset.end(),
              [](const LineRobot& a, const LineRobot& b) { return a.id < b.id; });
    do {
      best = std::min(best, chain_time(subset, source_time, dest));
    } while (std::next_permutation(
        subset.begin(), subset.end(),
        [](const LineRobot& a, const LineRobot& b) { return a.id < b.id; }));
  }
  return best;
}

double brute_pony(const ValidatedInstance& inst, bool increasing_only) {
  if (inst.variant() != Variant::kPony) {
    fail(Errc::kVariantMismatch, "brute_pony expects a pony instance");
  }
  if (inst.robots().size() > 8) fail(Errc::kTooLarge, "brute_pony guard is n <= 8");
  std::vector<LineRobot> line;
  line.reserve(inst.robots().size());
  for (const Robot& r : inst.robots()) line.push_back({r.id, r.p, r.v, 0.0});
  return brute_line(line, 0.0, 1.0, increasing_only);
}

double brute_hb(const ValidatedInstance& inst) {
  if (inst.variant() != Variant::kHalfBroadcast) {
    fail(Errc::kVariantMismatch, "brute_hb expects a half_broadcast instance");
  }
  if (inst.robots().size() > 6) fail(Errc::kTooLarge, "brute_hb guard is n <= 6");
  double best = kInf;
  for (int dir : {+1, -1}) {
    std::vector<LineRobot> line;
    line.reserve(inst.robots().size());
    for (const Robot& r : inst.robots()) {
      line.push_back({r.id, dir * r.p, r.v, 0.0});
    }
    best = std::min(best, brute_line(line, 0.0, 1.0));
  }
  return best;
}

namespace {

// Feasible handover interval endpoints for crossing robot l (position <= 0
// in the oriented frame) handing to r at m in [0, 1]; mirrors the solver's
// kinematics but is derived independently from the two motion equations.
void oracle_m_interval(double lp, double lv, double rp, double rv,
                       double& m_lo, double& m_hi) {
  const double x_star = (lv * rp + rv * lp) / (lv + rv);
  m_lo = std::clamp(x_star, 0.0, 1.0);
  if (lv > rv) {
    const double x_catch = (lv * rp - rv * lp) / (lv - rv);
    m_hi = std::min(1.0, x_catch);
  } else {
    m_hi = m_lo;
  }
  m_hi = std::max(m_hi, m_lo);
}

struct SplitWorkspace {
  std::vector<LineRobot> right;  // speed-sorted template, releases per m
  std::vector<LineRobot> left;
  std::vector<double> right_p;   // original frame positions for the template
  int l_index_left = -1;         // l's slot in the left template
};

// max(left, right) delivery for: l picks at 0, carries to m, hands off at
// t = (|p_l| + m)/v_l, then returns to deliver the -1 side.
double split_value(SplitWorkspace& ws, double l_abs_p, double l_v, double m) {
  const double t = (l_abs_p + m) / l_v;
  // Right side: source at m available at t, dest at +1.
  for (std::size_t i = 0; i < ws.right.size(); ++i) {
    const double p = ws.right_p[i];
    if (p >= m) {
      ws.right[i].p = p - m;
      ws.right[i].release = 0.0;
    } else {
      ws.right[i].p = 0.0;
      ws.right[i].release = (m - p) / ws.right[i].v;
    }
  }
  const double right_time =
      m >= 1.0 ? t
               : best_over_masks(ws.right.data(),
                                 static_cast<int>(ws.right.size()), t, 1.0 - m);
  if (right_time == kInf) return kInf;
  // Left side (reflected): l re-enters at the source at t + m/v_l.
  ws.left[static_cast<std::size_t>(ws.l_index_left)].release = t + m / l_v;
  const double left_time = best_over_masks(
      ws.left.data(), static_cast<int>(ws.left.size()), 0.0, 1.0);
  return std::max(left_time, right_time);
}

}  // namespace

double brute_broadcast(const ValidatedInstance& inst, int grid) {
  if (inst.variant() != Variant::kBroadcast) {
    fail(Errc::kVariantMismatch, "brute_broadcast expects a broadcast instance");
  }
  if (inst.robots().size() > 4) {
    fail(Errc::kTooLarge, "brute_broadcast guard is n <= 4");
  }
  if (grid < 1000) fail(Errc::kInvalidRange, "grid must be >= 1000");

  double best = kInf;
  for (int dir : {+1, -1}) {
    std::vector<Robot> robots = inst.robots();
    if (dir < 0) {
      for (Robot& r : robots) r.p = r.p == 0.0 ? 0.0 : -r.p;
    }
    // No-crossing plan: each side served by its own robots; p = 0 joins the
    // positive side (the reflected frame covers the other assignment).
    {
      std::vector<LineRobot> left, right;
      for (const Robot& r : robots) {
        if (r.p < 0.0) left.push_back({r.id, -r.p, r.v, 0.0});
        else right.push_back({r.id, r.p, r.v, 0.0});
      }
      const double nc = std::max(brute_line(left, 0.0, 1.0),
                                 brute_line(right, 0.0, 1.0));
      best = std::min(best, nc);
    }
    // Split plans: l crosses from the nonpositive side, hands off at m.
    for (const Robot& l : robots) {
      if (l.p > 0.0) continue;
      SplitWorkspace ws;
      for (const Robot& r : robots) {
        if (r.id == l.id) continue;
        if (r.p < 0.0) ws.left.push_back({r.id, -r.p, r.v, 0.0});
      }
      ws.left.push_back({l.id, 0.0, l.v, 0.0});  // release set per m
      std::sort(ws.left.begin(), ws.left.end(), line_robot_speed_order);
      for (std::size_t i = 0; i < ws.left.size(); ++i) {
        if (ws.left[i].id == l.id) ws.l_index_left = static_cast<int>(i);
      }
      std::vector<Robot> receivers;
      for (const Robot& r : robots) {
        if (r.id != l.id && r.p >= 0.0) {
          ws.right.push_back({r.id, r.p, r.v, 0.0});
          receivers.push_back(r);
        }
      }
      std::sort(ws.right.begin(), ws.right.end(), line_robot_speed_order);
      for (const LineRobot& r : ws.right) ws.right_p.push_back(r.p);
      receivers.push_back(Robot{kEndpointPos, 1.0, 0.0, 0.0});  // virtual

      const double l_abs_p = -l.p;
      for (const Robot& recv : receivers) {
        double m_lo = 0.0, m_hi = 0.0;
        oracle_m_interval(l.p, l.v, recv.p, recv.v, m_lo, m_hi);
        auto eval = [&](double m) { return split_value(ws, l_abs_p, l.v, m); };
        if (m_hi - m_lo < 1e-12) {
          best = std::min(best, eval(m_lo));
          continue;
        }
        // Uniform grid, then a local ternary polish around the best cell.
        const double step = (m_hi - m_lo) / grid;
        int best_i = 0;
        double best_f = kInf;
        for (int i = 0; i <= grid; ++i) {
          const double f = eval(m_lo + step * i);
          if (f < best_f) {
            best_f = f;
            best_i = i;
          }
        }
        best = std::min(best, best_f);
        double a = m_lo + step * std::max(0, best_i - 1);
        double b = m_lo + step * std::min(grid, best_i + 1);
        for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
          const double m1 = a + (b - a) / 3.0;
          const double m2 = b - (b - a) / 3.0;
          const double f1 = eval(m1);
          const double f2 = eval(m2);
          best = std::min(best, std::min(f1, f2));
          if (f1 <= f2) b = m2;
          else a = m1;
        }
      }
    }
  }
  return best;
}

namespace {

double solo_hb(const Robot& r) { return (std::abs(r.p) + 1.0) / r.v; }

// Candidate handover points for giver g (leg (|p_g| + m)/v_g to m >= 0) and
// receiver w required at m no later: |p_w - m| <= (v_w/v_g)(|p_g| + m).
// The feasible set is one interval; objectives below are convex piecewise
// linear, so the optimum sits at an interval endpoint or an objective kink.
template <typename F>
double min_over_feasible(double q, double vg, double pw, double vw, F value,
                         double kink) {
  const double c = vw / vg;
  double cands[6];
  int k = 0;
  cands[k++] = 0.0;
  cands[k++] = 1.0;
  cands[k++] = std::clamp((pw - c * q) / (1.0 + c), 0.0, 1.0);
  if (c != 1.0) cands[k++] = std::clamp((pw + c * q) / (1.0 - c), 0.0, 1.0);
  cands[k++] = std::clamp(pw, 0.0, 1.0);
  cands[k++] = std::clamp(kink, 0.0, 1.0);
  double best = kInf;
  for (int i = 0; i < k; ++i) {
    const double m = cands[i];
    if (std::abs(pw - m) <= c * (q + m) + 1e-12) {
      best = std::min(best, value(m));
    }
  }
  return best;
}

}  // namespace

double two_robot_hb(const Robot& r, const Robot& r2) {
  double best = std::min(solo_hb(r), solo_hb(r2));
  for (int dir : {+1, -1}) {
    const Robot a{r.id, dir * r.p, r.v, 0.0};
    const Robot b{r2.id, dir * r2.p, r2.v, 0.0};
    for (const auto& [g, w] : {std::pair(a, b), std::pair(b, a)}) {
      const double q = std::abs(g.p);
      auto value = [&](double m) {
        return (q + m) / g.v + (1.0 - m) / w.v;
      };
      best = std::min(best,
                      min_over_feasible(q, g.v, w.p, w.v, value, 0.0));
    }
  }
  return best;
}

double two_robot_broadcast(const Robot& r, const Robot& r2) {
  double best = std::min((std::abs(r.p) + 3.0) / r.v,
                         (std::abs(r2.p) + 3.0) / r2.v);
  best = std::min(best, std::max(solo_hb(r), solo_hb(r2)));
  for (int dir : {+1, -1}) {
    const Robot a{r.id, dir * r.p, r.v, 0.0};
    const Robot b{r2.id, dir * r2.p, r2.v, 0.0};
    for (const auto& [g, w] : {std::pair(a, b), std::pair(b, a)}) {
      const double q = std::abs(g.p);
      auto value = [&](double m) {
        return (q + m) / g.v +
               std::max((1.0 + m) / g.v, (1.0 - m) / w.v);
      };
      const double kink = (g.v - w.v) / (g.v + w.v);
      best = std::min(best,
                      min_over_feasible(q, g.v, w.p, w.v, value, kink));
    }
  }
  return best;
}

}  // namespace pony
