#include "ponyexpress/gpe.hpp"

#include <algorithm>
#include <cmath>

#include "ponyexpress/error.hpp"
#include "ponyexpress/pony_solver.hpp"
#include "ponyexpress/validate.hpp"

namespace pony {

namespace {

struct GpeState {
  bool carrier = false;
  double acq = 0.0;    // absolute acquisition time
  double start = 0.0;  // virtual start: offset from source is v*(t - start)
  int prev = -1;       // chain predecessor index, -1 = picked up at source
  HandoverEvent acq_event;
};

enum : int { kDeliver = 0, kPickup = 1, kHandover = 2 };

}  // namespace

SolveResult solve_gpe(const GpeInstance& g) {
  if (g.dest_pos < g.source_pos) {
    fail(Errc::kInvalidRange, "dest_pos must not precede source_pos");
  }
  for (const GpeRobot& r : g.robots) {
    if (!(r.q >= 0.0)) fail(Errc::kPositionOutOfDomain, "negative offset");
    if (!(r.v > 0.0)) fail(Errc::kNonPositiveSpeed, "robot speed must be > 0");
    if (!(r.release >= 0.0)) fail(Errc::kInvalidRange, "negative release");
  }
  SolveResult result;
  if (g.dest_pos == g.source_pos) {
    result.objective = g.source_time;
    return result;
  }
  const int n = static_cast<int>(g.robots.size());
  if (n == 0) return result;  // unreachable: +inf objective, no chain

  // When the instance is a plain zero-release game on [0,1] it IS a
  // Pony Express instance; the specialized sweep is both faster and the
  // reference for this case, so its result is returned bit-for-bit.
  if (g.source_pos == 0.0 && g.source_time == 0.0 && g.dest_pos == 1.0) {
    bool plain = true;
    ProblemInstance pinst;
    pinst.variant = Variant::kPony;
    for (const GpeRobot& r : g.robots) {
      plain = plain && r.release == 0.0 && r.q <= 1.0;
      pinst.robots.push_back({r.id, r.q, r.v, 0.0});
    }
    if (plain) {
      try {
        return solve_pony(validate(pinst));
      } catch (const Error&) {
        // Raw GPE instances may repeat ids, which the strict front end
        // rejects; those fall through to the general event loop.
      }
    }
  }

  const double dist = g.dest_pos - g.source_pos;
  std::vector<GpeState> st(static_cast<std::size_t>(n));
  auto arrival = [&](int i) {
    const GpeRobot& r = g.robots[static_cast<std::size_t>(i)];
    return r.release + r.q / r.v;
  };

  const long cap = 4L * n * n + 16;
  for (long iter = 0; iter <= cap; ++iter) {
    double best_t = kInf;
    int best_type = kDeliver, best_a = -1, best_b = -1;
    auto consider = [&](double t, int type, int a, int b) {
      if (t < best_t ||
          (t == best_t && (type < best_type ||
                           (type == best_type && a < best_a)))) {
        best_t = t;
        best_type = type;
        best_a = a;
        best_b = b;
      }
    };
    for (int i = 0; i < n; ++i) {
      const GpeRobot& r = g.robots[static_cast<std::size_t>(i)];
      const GpeState& s = st[static_cast<std::size_t>(i)];
      if (s.carrier) {
        consider(s.start + dist / r.v, kDeliver, i, -1);
      } else {
        consider(std::max(arrival(i), g.source_time), kPickup, i, -1);
      }
    }
    for (int c = 0; c < n; ++c) {
      if (!st[static_cast<std::size_t>(c)].carrier) continue;
      const GpeRobot& rc = g.robots[static_cast<std::size_t>(c)];
      const GpeState& sc = st[static_cast<std::size_t>(c)];
      for (int r = 0; r < n; ++r) {
        if (st[static_cast<std::size_t>(r)].carrier) continue;
        const GpeRobot& rr = g.robots[static_cast<std::size_t>(r)];
        if (!(rr.v > rc.v)) continue;
        // Outbound carrier u = v_c (t - start) meets inbound receiver
        // u = q - v_r (t - release) while both formulas are live.
        const double t =
            (rr.q + rr.v * rr.release + rc.v * sc.start) / (rc.v + rr.v);
        if (t < sc.acq || t < rr.release || t > arrival(r)) continue;
        consider(t, kHandover, r, c);
      }
    }
    if (best_a < 0) fail(Errc::kNoDelivery, "no pending event");

    GpeState& sa = st[static_cast<std::size_t>(best_a)];
    const GpeRobot& ra = g.robots[static_cast<std::size_t>(best_a)];
    if (best_type == kDeliver) {
      result.objective = best_t;
      Chain chain;
      chain.push_back({best_t, g.dest_pos, ra.id, kEndpointPos});
      for (int i = best_a; i >= 0; i = st[static_cast<std::size_t>(i)].prev) {
        chain.push_back(st[static_cast<std::size_t>(i)].acq_event);
      }
      std::reverse(chain.begin(), chain.end());
      result.chains.push_back(std::move(chain));
      return result;
    }
    if (best_type == kPickup) {
      sa.carrier = true;
      sa.acq = sa.start = best_t;
      sa.prev = -1;
      sa.acq_event = {best_t, g.source_pos, kSource, ra.id};
    } else {
      const GpeState& sc = st[static_cast<std::size_t>(best_b)];
      const GpeRobot& rc = g.robots[static_cast<std::size_t>(best_b)];
      const double u = rc.v * (best_t - sc.start);
      sa.carrier = true;
      sa.acq = best_t;
      sa.start = best_t - u / ra.v;
      sa.prev = best_b;
      sa.acq_event = {best_t, g.source_pos + u, rc.id, ra.id};
    }
  }
  fail(Errc::kNoDelivery, "event cap exceeded");
}

}  // namespace pony
