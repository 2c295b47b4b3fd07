#include "ponyexpress/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ponyexpress/error.hpp"
#include "ponyexpress/validate.hpp"

namespace pony {

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * u01(rng);
}

}  // namespace

ProblemInstance gen_random(Variant variant, int n, std::uint64_t seed,
                           double speed_lo, double speed_hi) {
  if (n < 1) fail(Errc::kInvalidRange, "n must be >= 1, got " + std::to_string(n));
  if (!(speed_lo > 0.0) || !(speed_lo <= speed_hi)) {
    fail(Errc::kInvalidRange, "speed range must satisfy 0 < lo <= hi");
  }
  std::mt19937_64 rng(seed);
  const double lo = domain_lo(variant);
  const double hi = domain_hi(variant);
  ProblemInstance inst;
  inst.variant = variant;
  inst.robots.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Robot r;
    r.id = i;
    r.p = uniform(rng, lo, hi);
    r.v = uniform(rng, speed_lo, speed_hi);
    inst.robots.push_back(r);
  }
  // Exact position collisions are vanishingly rare but would break the
  // "pairwise distinct" contract; redraw offenders deterministically.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (bool collided = true; collided;) {
    collided = false;
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return inst.robots[static_cast<std::size_t>(a)].p <
             inst.robots[static_cast<std::size_t>(b)].p;
    });
    for (int i = 1; i < n; ++i) {
      Robot& prev = inst.robots[static_cast<std::size_t>(order[i - 1])];
      Robot& cur = inst.robots[static_cast<std::size_t>(order[i])];
      if (cur.p == prev.p) {
        cur.p = uniform(rng, lo, hi);
        collided = true;
      }
    }
  }
  return inst;
}

ProblemInstance gen_hb_adversary() {
  ProblemInstance inst;
  inst.variant = Variant::kHalfBroadcast;
  inst.robots = {Robot{0, 0.0, 0.5, 0.0}, Robot{1, -1.0, 1.0, 0.0}};
  return inst;
}

ProblemInstance gen_bc_adversary(double y) {
  if (!(y >= 0.0) || !(y <= 0.5)) {
    fail(Errc::kYOutOfRange, "y must lie in [0, 1/2], got " + std::to_string(y));
  }
  const double a = (1.0 - y) / 2.0;
  ProblemInstance inst;
  inst.variant = Variant::kBroadcast;
  inst.robots = {Robot{0, 0.0, 1.0, 0.0}, Robot{1, y + a, a, 0.0}};
  return inst;
}

}  // namespace pony
