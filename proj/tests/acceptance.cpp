// Acceptance runner: executes the battery of end-to-end checks the library
// is required to satisfy, printing one PASS/FAIL line per criterion and
// exiting with the number of failures.  Tolerances and runtime budgets are
// pinned here on purpose; loosening them is not an acceptable fix for a
// failing line.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ponyexpress/bc_solver.hpp"
#include "ponyexpress/generators.hpp"
#include "ponyexpress/harness.hpp"
#include "ponyexpress/hb_solver.hpp"
#include "ponyexpress/online_sim.hpp"
#include "ponyexpress/oracle.hpp"
#include "ponyexpress/pony_solver.hpp"
#include "ponyexpress/serialize.hpp"
#include "ponyexpress/validate.hpp"
#include "property_checks.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. The fast pony solver, the brute-force oracle and the online
// simulation agree on 1000 random instances per size n in 1..6.
Outcome criterion_pony_agreement() {
  Outcome out;
  int mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 1000; ++i) {
      auto inst = pony::validate(
          pony::gen_random(pony::Variant::kPony, n, 100000u * n + i));
      const double solved = pony::solve_pony(inst).objective;
      const double brute = pony::brute_pony(inst);
      const double sim = pony::simulate(inst).objective;
      if (std::abs(solved - brute) > 1e-9 || std::abs(solved - sim) > 1e-9) {
        ++mismatches;
        if (out.detail.empty()) {
          std::ostringstream msg;
          msg << "solver " << solved << " oracle " << brute << " simulation "
              << sim << " on " << pony::serialize(inst.get());
          out.detail = msg.str();
        }
      }
    }
  }
  out.ok = mismatches == 0;
  if (!out.ok) out.detail = std::to_string(mismatches) + " mismatches; first: " + out.detail;
  return out;
}

// 2. Half-broadcast two-robot fixture: offline 4/3, online 2, ratio 3/2.
Outcome criterion_hb_fixture() {
  Outcome out;
  auto inst = pony::validate(pony::gen_hb_adversary());
  const double offline = pony::solve_half_broadcast(inst).objective;
  const double online = pony::simulate(inst).objective;
  const double ratio = pony::competitive_ratio(inst);
  std::ostringstream msg;
  msg << "offline " << offline << " online " << online << " ratio " << ratio;
  out.detail = msg.str();
  out.ok = std::abs(offline - 4.0 / 3.0) <= 1e-9 &&
           std::abs(online - 2.0) <= 1e-9 && std::abs(ratio - 1.5) <= 1e-9;
  return out;
}

// 3. Half-broadcast solver equals the brute-force oracle on 1000 random
// instances with up to 5 robots.
Outcome criterion_hb_oracle() {
  Outcome out;
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    auto inst = pony::validate(
        pony::gen_random(pony::Variant::kHalfBroadcast, 1 + i % 5, 700000u + i));
    const double solved = pony::solve_half_broadcast(inst).objective;
    const double brute = pony::brute_hb(inst);
    if (std::abs(solved - brute) > 1e-9) {
      ++mismatches;
      if (out.detail.empty()) {
        std::ostringstream msg;
        msg << "solver " << solved << " oracle " << brute << " on "
            << pony::serialize(inst.get());
        out.detail = msg.str();
      }
    }
  }
  out.ok = mismatches == 0;
  return out;
}

// 4. Half-broadcast online-vs-offline ratio stays within 1.5 + 1e-6 over a
// 10^4-instance random sweep with up to 8 robots.
Outcome criterion_hb_sweep() {
  Outcome out;
  pony::RatioReport rep =
      pony::sweep(pony::Variant::kHalfBroadcast, 8, 10000, 7);
  std::ostringstream msg;
  msg << "max ratio " << rep.max_ratio << ", violations "
      << rep.violations.size() << " of " << rep.rows.size();
  out.detail = msg.str();
  out.ok = rep.violations.empty() && rep.max_ratio <= 1.5 + 1e-6;
  return out;
}

// 5. Broadcast two-robot fixture (offline 5/3, online 3, ratio 9/5) and the
// parameterized family: ratio curve (3+2y)(3-y)/(5+y) with minimum 9/5 at
// y=0 across 51 samples.
Outcome criterion_bc_fixture() {
  Outcome out;
  auto inst = pony::validate(pony::gen_bc_adversary(0.0));
  const double offline = pony::solve_broadcast(inst, 1e-6).objective;
  const double online = pony::simulate(inst).objective;
  const double ratio = pony::competitive_ratio(inst);
  bool ok = std::abs(offline - 5.0 / 3.0) <= 1e-6 &&
            std::abs(online - 3.0) <= 1e-9 && std::abs(ratio - 1.8) <= 1e-5;
  std::ostringstream msg;
  msg << "offline " << offline << " online " << online << " ratio " << ratio;

  pony::LbReport rep = pony::lb_family_sweep(51);
  int curve_misses = 0;
  for (const pony::LbRow& row : rep.rows) {
    const double expect =
        (3.0 + 2.0 * row.y) * (3.0 - row.y) / (5.0 + row.y);
    if (std::abs(row.ratio - expect) > 1e-6) ++curve_misses;
  }
  if (curve_misses > 0 || std::abs(rep.min_ratio - 1.8) > 1e-6 ||
      rep.argmin_y != 0.0) {
    ok = false;
    msg << "; family curve misses " << curve_misses << ", min "
        << rep.min_ratio << " at y=" << rep.argmin_y;
  }
  out.ok = ok;
  out.detail = msg.str();
  return out;
}

// 6. Broadcast solver (eps 1e-6) agrees with the grid oracle (10^4 points)
// to 1e-3 on 300 random instances with up to 4 robots.
Outcome criterion_bc_oracle() {
  Outcome out;
  int mismatches = 0;
  double worst_gap = 0.0;
  for (int i = 0; i < 300; ++i) {
    auto inst = pony::validate(
        pony::gen_random(pony::Variant::kBroadcast, 1 + i % 4, 800000u + i));
    const double solved = pony::solve_broadcast(inst, 1e-6).objective;
    const double brute = pony::brute_broadcast(inst, 10000);
    const double gap = std::abs(solved - brute);
    worst_gap = std::max(worst_gap, gap);
    if (gap > 1e-3) {
      ++mismatches;
      if (out.detail.empty()) {
        std::ostringstream msg;
        msg << "solver " << solved << " oracle " << brute << " on "
            << pony::serialize(inst.get());
        out.detail = msg.str();
      }
    }
  }
  out.ok = mismatches == 0;
  if (out.ok) {
    out.detail = "worst gap " + std::to_string(worst_gap);
  }
  return out;
}

// 7. Broadcast online-vs-offline ratio stays within 1.8 + 1e-5 over a
// 5000-instance random sweep with up to 6 robots.  KNOWN DEFECT: the
// protocol misses the bound on instances whose robots all start on one
// side of the source with the nearer robot faster; measured ratios reach
// well beyond the claim, and the two-robot analysis underlying it does not
// cover this configuration.  The criterion is left failing deliberately.
Outcome criterion_bc_sweep() {
  Outcome out;
  pony::RatioReport rep =
      pony::sweep(pony::Variant::kBroadcast, 6, 5000, 7, 0.1, 2.0, 1e-5);
  int below_unity = 0;
  for (const pony::RatioRow& row : rep.rows) {
    if (row.below_unity) ++below_unity;
  }
  std::ostringstream msg;
  msg << "max ratio " << rep.max_ratio << ", violations "
      << rep.violations.size() << " of " << rep.rows.size();
  if (!rep.violations.empty()) {
    const pony::RatioRow& w =
        rep.rows[static_cast<std::size_t>(rep.max_index)];
    msg << "; worst " << w.digest << " (n=" << w.n << ", online " << w.online
        << ", offline " << w.offline << ")";
  }
  if (below_unity > 0) {
    msg << "; " << below_unity
        << " rows where the online run beat the offline reference "
           "(its strategy family is not exhaustive there)";
  }
  out.detail = msg.str();
  out.ok = rep.violations.empty() && rep.max_ratio <= 1.8 + 1e-5;
  return out;
}

// 8. Pony solver scales: n=10^5 solves in under a second, and doubling n
// at n in {2e4, 4e4, 8e4} grows the mean runtime (5 runs) by at most 2.4x.
Outcome criterion_scaling() {
  Outcome out;
  auto timed_solve = [](int n, unsigned seed) {
    auto inst =
        pony::validate(pony::gen_random(pony::Variant::kPony, n, seed));
    const auto start = Clock::now();
    const double obj = pony::solve_pony(inst).objective;
    const double elapsed = seconds_since(start);
    return std::make_pair(elapsed, obj);
  };

  (void)timed_solve(100000, 1);  // warm-up
  const double big = timed_solve(100000, 2).first;

  // Mean of 5 timed runs per size, then the doubling ratio anchored at
  // each of the three smaller sizes. Individual solves are far below the
  // scheduler-noise floor of a shared machine, so a run reports the
  // per-solve average of a ~25 ms batch, and the runs for the four sizes
  // are interleaved so ambient load drift scales them all alike.
  const std::vector<int> sizes = {20000, 40000, 80000, 160000};
  std::vector<pony::ValidatedInstance> insts;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    insts.push_back(pony::validate(
        pony::gen_random(pony::Variant::kPony, sizes[i], 11 + i)));
  }
  auto run_time = [&](std::size_t idx) {
    const int batch = std::max(1, 20000000 / sizes[idx]);
    volatile double sink = 0.0;
    const auto start = Clock::now();
    for (int i = 0; i < batch; ++i) {
      sink = pony::solve_pony(insts[idx]).objective;
    }
    (void)sink;
    return seconds_since(start) / batch;
  };
  std::vector<double> means(sizes.size(), 0.0);
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    (void)run_time(idx);  // untimed warm-up
  }
  for (unsigned run = 0; run < 5; ++run) {
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
      means[idx] += run_time(idx) / 5.0;
    }
  }
  std::ostringstream msg;
  msg << "n=1e5 in " << big << " s; doubling ratios";
  bool ratios_ok = true;
  for (std::size_t i = 0; i + 1 < means.size(); ++i) {
    const double r = means[i + 1] / means[i];
    ratios_ok = ratios_ok && r <= 2.4;
    msg << (i == 0 ? " " : ", ") << r;
  }
  out.detail = msg.str();
  out.ok = big < 1.0 && ratios_ok;
  return out;
}

// 9. Randomized property suite at 1000 cases per variant.
Outcome criterion_properties() {
  Outcome out;
  const std::vector<std::pair<const char*, pony::PropertyResult>> checks = {
      {"speed scaling", pony::check_speed_scaling(1000)},
      {"reflection", pony::check_reflection(1000)},
      {"monotone addition", pony::check_monotone_addition(1000)},
      {"chain speeds", pony::check_chain_speeds(1000)},
      {"speed-limited trajectories", pony::check_lipschitz(1000)},
      {"sweep determinism", pony::check_sweep_determinism(1000)},
  };
  std::ostringstream msg;
  for (const auto& [name, res] : checks) {
    if (!res.ok()) {
      out.ok = false;
      msg << name << ": " << res.failures << " failures (first: "
          << res.first_failure << "); ";
    }
  }
  out.detail = out.ok ? "6 properties, all green" : msg.str();
  return out;
}

struct Criterion {
  int id;
  const char* label;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "pony relay: solver == oracle == simulation (6000 instances)", 10.0,
       criterion_pony_agreement},
      {2, "half-broadcast fixture: offline 4/3, online 2, ratio 3/2", 5.0,
       criterion_hb_fixture},
      {3, "half-broadcast solver == oracle (1000 instances, n <= 5)", 30.0,
       criterion_hb_oracle},
      {4, "half-broadcast ratio <= 1.5 + 1e-6 (10^4-instance sweep)", 120.0,
       criterion_hb_sweep},
      {5, "broadcast fixture 5/3 | 3 | 9/5 and family ratio curve", 10.0,
       criterion_bc_fixture},
      {6, "broadcast solver vs grid oracle within 1e-3 (300 instances)", 300.0,
       criterion_bc_oracle},
      {7, "broadcast ratio <= 1.8 + 1e-5 (5000-instance sweep)", 300.0,
       criterion_bc_sweep},
      {8, "pony solver scaling: 1e5 robots < 1 s, doubling <= 2.4x", 60.0,
       criterion_scaling},
      {9, "property suite (1000 cases per variant)", 600.0,
       criterion_properties},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    if (elapsed > c.budget_s) {
      out.ok = false;
      out.detail += (out.detail.empty() ? "" : "; ");
      out.detail += "over time budget of " + std::to_string(c.budget_s) + " s";
    }
    if (!out.ok) ++failures;
    std::printf("[%s] %d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id,
                c.label, elapsed, out.detail.empty() ? "" : " — ",
                out.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  } else {
    std::printf("all %zu criteria passed\n", criteria.size());
  }
  return failures;
}
