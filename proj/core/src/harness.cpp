#include "ponyexpress/harness.hpp"

#include <algorithm>
#include <random>

#include "ponyexpress/bc_solver.hpp"
#include "ponyexpress/error.hpp"
#include "ponyexpress/generators.hpp"
#include "ponyexpress/hb_solver.hpp"
#include "ponyexpress/online_sim.hpp"
#include "ponyexpress/pony_solver.hpp"
#include "ponyexpress/serialize.hpp"

namespace pony {

namespace {

constexpr double kOfflineEps = 1e-9;  // broadcast reference accuracy

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

double ratio_bound(Variant v) {
  switch (v) {
    case Variant::kPony:
      return 1.0;
    case Variant::kHalfBroadcast:
      return 1.5;
    case Variant::kBroadcast:
      return 1.8;
  }
  fail(Errc::kUnknownVariant, "unhandled variant");
}

std::string instance_digest(const ValidatedInstance& inst) {
  std::uint64_t h = fnv1a64(serialize(inst.get()));
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

double offline_objective(const ValidatedInstance& inst) {
  switch (inst.variant()) {
    case Variant::kPony:
      return solve_pony(inst).objective;
    case Variant::kHalfBroadcast:
      return solve_half_broadcast(inst).objective;
    case Variant::kBroadcast:
      return solve_broadcast(inst, kOfflineEps).objective;
  }
  fail(Errc::kUnknownVariant, "unhandled variant");
}

double competitive_ratio(const ValidatedInstance& inst) {
  return simulate(inst).objective / offline_objective(inst);
}

RatioReport sweep(Variant variant, int n, int trials, std::uint64_t seed,
                  double speed_lo, double speed_hi, double tol) {
  if (n < 1) fail(Errc::kInvalidRange, "sweep needs n >= 1");
  if (trials < 1) fail(Errc::kInvalidRange, "sweep needs trials >= 1");
  if (tol < 0.0) fail(Errc::kInvalidRange, "sweep tolerance must be >= 0");

  RatioReport report;
  report.variant = variant;
  report.bound = ratio_bound(variant);
  report.tol = tol;
  report.seed = seed;
  report.rows.reserve(static_cast<std::size_t>(trials));

  std::mt19937_64 master(seed);
  std::uniform_int_distribution<int> size_dist(1, n);
  for (int i = 0; i < trials; ++i) {
    const int ni = size_dist(master);
    const std::uint64_t sub_seed = master();
    ValidatedInstance inst =
        validate(gen_random(variant, ni, sub_seed, speed_lo, speed_hi));

    RatioRow row;
    row.index = i;
    row.digest = instance_digest(inst);
    row.n = ni;
    row.online = simulate(inst).objective;
    row.offline = offline_objective(inst);
    row.ratio = row.online / row.offline;
    row.violation = row.ratio > report.bound + tol;
    row.below_unity = row.ratio < 1.0 - kEps;
    if (row.violation) report.violations.push_back(i);
    if (row.ratio > report.max_ratio) {
      report.max_ratio = row.ratio;
      report.max_index = i;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

LbReport lb_family_sweep(int samples) {
  if (samples < 2) fail(Errc::kInvalidRange, "lb family needs >= 2 samples");

  LbReport report;
  report.rows.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double y = 0.5 * k / (samples - 1);
    ValidatedInstance inst = validate(gen_bc_adversary(y));

    LbRow row;
    row.y = y;
    row.online = 3.0 + 2.0 * y;
    row.simulated = simulate(inst).objective;
    row.offline = solve_broadcast(inst, kOfflineEps).objective;
    row.ratio = row.online / row.offline;
    if (report.rows.empty() || row.ratio < report.min_ratio) {
      report.min_ratio = row.ratio;
      report.argmin_y = y;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace pony
