#include "ponyexpress/pony_solver.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>
#include <vector>

#include "ponyexpress/error.hpp"
#include "ponyexpress/meet.hpp"

namespace pony {

namespace {

struct Node {
  double p = 0.0;
  double v = 0.0;
  double acq = 0.0;   // acquisition time; meaningful while has_message
  double meet = kInf; // predicted meeting time with the current left neighbor
  int id = 0;
  int left = -1;
  int right = -1;
  int gen = 0;        // bumped on every recompute; stale queue entries skip
  int chain_prev = -1;
  bool has_message = false;
  bool removed = false;
  HandoverEvent acq_event;
};

// A carrier moved left from p until acq, then right: p + v*t - 2*v*acq.
double front_pos(const Node& c, double t) {
  return c.p + c.v * t - 2.0 * c.v * c.acq;
}

}  // namespace

SolveResult solve_pony(const ValidatedInstance& inst) {
  if (inst.variant() != Variant::kPony) {
    fail(Errc::kVariantMismatch, "solve_pony expects a pony instance");
  }
  const auto& robots = inst.robots();

  // Dominance filter: scanning by ascending position, a robot no faster
  // than some robot on its left can never receive the message. The front
  // meets the left robot first (non-carriers walk left, so they never
  // reorder; the front only moves right), and from then on the front is at
  // least that fast, so the right robot is never a strictly faster
  // receiver. Dropping it changes no trajectory and no event among the
  // survivors, whose speeds now strictly increase with position.
  const std::vector<double>& speeds = inst.speeds();
  std::vector<std::size_t> kept;
  kept.reserve(64);
  double max_v = 0.0;
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    if (speeds[i] > max_v) {
      max_v = speeds[i];
      kept.push_back(i);
    }
  }
  const int n = static_cast<int>(kept.size());

  // nodes[0] = source sentinel, [1..n] = robots by position, [n+1] = dest.
  std::vector<Node> nodes(static_cast<std::size_t>(n) + 2);
  nodes[0].id = kSource;
  nodes[0].has_message = true;
  for (int i = 1; i <= n; ++i) {
    const Robot& r = robots[kept[static_cast<std::size_t>(i - 1)]];
    nodes[static_cast<std::size_t>(i)].p = r.p;
    nodes[static_cast<std::size_t>(i)].v = r.v;
    nodes[static_cast<std::size_t>(i)].id = r.id;
  }
  Node& dst = nodes[static_cast<std::size_t>(n) + 1];
  dst.p = 1.0;
  dst.id = kEndpointPos;
  for (int i = 0; i <= n + 1; ++i) {
    nodes[static_cast<std::size_t>(i)].left = i - 1;
    nodes[static_cast<std::size_t>(i)].right = i <= n ? i + 1 : -1;
  }

  // Meeting time of node i with its current left neighbor: the carrier
  // formula when the neighbor holds the message, plain catch-up otherwise.
  auto compute_meet = [&](int i) -> double {
    const Node& x = nodes[static_cast<std::size_t>(i)];
    const Node& l = nodes[static_cast<std::size_t>(x.left)];
    if (l.has_message) return meet_time_carrier(l.p, l.v, l.acq, x.p, x.v);
    return meet_time_catch_up(l.p, l.v, x.p, x.v);
  };

  using Entry = std::tuple<double, int, int>;  // (meet, node, generation)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  auto push_meet = [&](int i) {
    Node& x = nodes[static_cast<std::size_t>(i)];
    x.meet = compute_meet(i);
    ++x.gen;
    if (std::isfinite(x.meet)) queue.emplace(x.meet, i, x.gen);
  };
  for (int i = 1; i <= n + 1; ++i) push_meet(i);

  double delivery = kInf;
  int final_front = -1;
  while (!queue.empty()) {
    const auto [t, i, gen] = queue.top();
    queue.pop();
    Node& x = nodes[static_cast<std::size_t>(i)];
    if (x.removed || gen != x.gen) continue;
    Node& l = nodes[static_cast<std::size_t>(x.left)];
    if (l.has_message) {
      if (i == n + 1) {  // the front reached the destination
        delivery = t;
        final_front = x.left;
        break;
      }
      x.has_message = true;
      x.acq = t;
      x.acq_event = HandoverEvent{t, front_pos(l, t), l.id, x.id};
      if (l.v < x.v) {
        // True handover: x becomes the front; the giver stays linked but
        // can never generate an earlier meeting than its receiver. Bump
        // x's generation so its own pending meeting entry dies.
        x.chain_prev = x.left;
        ++x.gen;
        push_meet(x.right);
      } else {
        // Copy without handover: x can never outrun the front; retire it.
        x.removed = true;
        l.right = x.right;
        nodes[static_cast<std::size_t>(x.right)].left = x.left;
        push_meet(x.right);
      }
    } else {
      // x overtakes the slower message-less l: l is permanently blocked.
      l.removed = true;
      x.left = l.left;
      nodes[static_cast<std::size_t>(l.left)].right = i;
      push_meet(i);
    }
  }

  if (final_front < 0) fail(Errc::kNoDelivery, "sweep drained without delivery");

  SolveResult result;
  result.objective = delivery;
  result.time_pos = delivery;
  Chain chain;
  chain.push_back(HandoverEvent{delivery, 1.0,
                                nodes[static_cast<std::size_t>(final_front)].id,
                                kEndpointPos});
  for (int i = final_front; i > 0; ) {
    const Node& c = nodes[static_cast<std::size_t>(i)];
    chain.push_back(c.acq_event);
    i = c.chain_prev;
    if (i <= 0) break;
  }
  std::reverse(chain.begin(), chain.end());
  result.chains.push_back(std::move(chain));
  return result;
}

}  // namespace pony
