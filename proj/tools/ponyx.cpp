// ponyx: command-line front end for the message-relay solvers, the online
// protocol simulator and the competitive-ratio experiment harness.
//
// Every subcommand prints one JSON document on standard output. Exit codes:
// 0 success, 1 usage error, 2 validation/input error, 3 ratio-bound
// violation detected by a sweep.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ponyexpress/bc_solver.hpp"
#include "ponyexpress/error.hpp"
#include "ponyexpress/generators.hpp"
#include "ponyexpress/harness.hpp"
#include "ponyexpress/hb_solver.hpp"
#include "ponyexpress/online_sim.hpp"
#include "ponyexpress/oracle.hpp"
#include "ponyexpress/pony_solver.hpp"
#include "ponyexpress/serialize.hpp"
#include "ponyexpress/validate.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

// Round-tripped through the 12-significant-digit rendering so documents
// compare byte-identically across runs.
double sig12(double x) { return pony::round_sig12(x); }

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) pony::fail(pony::Errc::kMalformedDocument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pony::ValidatedInstance load_instance(const std::string& path) {
  return pony::parse_instance(read_input(path));
}

pony::Variant variant_from_name(const std::string& name) {
  if (name == "pony") return pony::Variant::kPony;
  if (name == "half_broadcast") return pony::Variant::kHalfBroadcast;
  if (name == "broadcast") return pony::Variant::kBroadcast;
  pony::fail(pony::Errc::kUnknownVariant, "unknown variant: " + name);
}

ordered_json chain_json(const pony::Chain& chain) {
  ordered_json arr = ordered_json::array();
  for (const pony::HandoverEvent& h : chain) {
    ordered_json e;
    e["t"] = sig12(h.t);
    e["x"] = sig12(h.x);
    e["giver"] = h.giver;
    e["receiver"] = h.receiver;
    arr.push_back(std::move(e));
  }
  return arr;
}

ordered_json solve_json(const pony::ValidatedInstance& inst, double eps) {
  pony::SolveResult res;
  pony::SplitPlan plan;
  switch (inst.variant()) {
    case pony::Variant::kPony:
      res = pony::solve_pony(inst);
      break;
    case pony::Variant::kHalfBroadcast:
      res = pony::solve_half_broadcast(inst);
      break;
    case pony::Variant::kBroadcast:
      res = pony::solve_broadcast(inst, eps, &plan);
      break;
  }

  ordered_json doc;
  doc["variant"] = pony::to_string(inst.variant());
  doc["objective"] = sig12(res.objective);
  if (res.time_pos) doc["time_pos"] = sig12(*res.time_pos);
  if (res.time_neg) doc["time_neg"] = sig12(*res.time_neg);
  if (res.direction) doc["direction"] = *res.direction;
  if (inst.variant() == pony::Variant::kBroadcast) {
    doc["eps"] = sig12(eps);
    ordered_json p;
    p["l"] = plan.l_id;
    p["receiver"] = plan.receiver_id;
    p["m"] = sig12(plan.m);
    p["t"] = sig12(plan.t);
    doc["plan"] = std::move(p);
  }
  ordered_json chains = ordered_json::array();
  for (const pony::Chain& c : res.chains) chains.push_back(chain_json(c));
  doc["chains"] = std::move(chains);
  return doc;
}

ordered_json simulate_json(const pony::ValidatedInstance& inst,
                           const std::string& trace_path) {
  pony::SimResult res = pony::simulate(inst);
  ordered_json doc;
  doc["variant"] = pony::to_string(inst.variant());
  doc["objective"] = sig12(res.objective);
  if (res.time_pos) doc["time_pos"] = sig12(*res.time_pos);
  if (res.time_neg) doc["time_neg"] = sig12(*res.time_neg);
  doc["events"] = res.events.size();
  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) {
      pony::fail(pony::Errc::kMalformedDocument,
                 "cannot write " + trace_path);
    }
    out << pony::trace_csv(res);
    doc["trace"] = trace_path;
  }
  return doc;
}

ordered_json ratio_json(const pony::ValidatedInstance& inst) {
  const double online = pony::simulate(inst).objective;
  const double offline = pony::offline_objective(inst);
  ordered_json doc;
  doc["variant"] = pony::to_string(inst.variant());
  doc["online"] = sig12(online);
  doc["offline"] = sig12(offline);
  doc["ratio"] = sig12(online / offline);
  return doc;
}

ordered_json sweep_json(const pony::RatioReport& report, bool with_rows) {
  ordered_json doc;
  doc["variant"] = pony::to_string(report.variant);
  doc["trials"] = report.rows.size();
  doc["seed"] = report.seed;
  doc["bound"] = sig12(report.bound);
  doc["tol"] = sig12(report.tol);
  doc["max_ratio"] = sig12(report.max_ratio);
  doc["max_index"] = report.max_index;
  if (report.max_index >= 0) {
    const pony::RatioRow& worst =
        report.rows[static_cast<std::size_t>(report.max_index)];
    doc["max_digest"] = worst.digest;
    doc["max_n"] = worst.n;
  }
  doc["violations"] = report.violations;
  if (with_rows) {
    ordered_json rows = ordered_json::array();
    for (const pony::RatioRow& r : report.rows) {
      ordered_json row;
      row["index"] = r.index;
      row["digest"] = r.digest;
      row["n"] = r.n;
      row["online"] = sig12(r.online);
      row["offline"] = sig12(r.offline);
      row["ratio"] = sig12(r.ratio);
      row["violation"] = r.violation;
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
  }
  return doc;
}

ordered_json lb_family_json(const pony::LbReport& report) {
  ordered_json doc;
  ordered_json rows = ordered_json::array();
  for (const pony::LbRow& r : report.rows) {
    ordered_json row;
    row["y"] = sig12(r.y);
    row["online"] = sig12(r.online);
    row["simulated"] = sig12(r.simulated);
    row["offline"] = sig12(r.offline);
    row["ratio"] = sig12(r.ratio);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["min_ratio"] = sig12(report.min_ratio);
  doc["argmin_y"] = sig12(report.argmin_y);
  return doc;
}

ordered_json oracle_json(const pony::ValidatedInstance& inst, int grid) {
  ordered_json doc;
  doc["variant"] = pony::to_string(inst.variant());
  switch (inst.variant()) {
    case pony::Variant::kPony:
      doc["objective"] = sig12(pony::brute_pony(inst));
      break;
    case pony::Variant::kHalfBroadcast:
      doc["objective"] = sig12(pony::brute_hb(inst));
      break;
    case pony::Variant::kBroadcast: {
      doc["objective"] = sig12(pony::brute_broadcast(inst, grid));
      doc["grid"] = grid;
      double min_v = pony::kInf;
      for (const pony::Robot& r : inst.robots()) {
        min_v = std::min(min_v, r.v);
      }
      // First-order bound: grid step (interval length <= 2 over `grid`
      // cells) times the split objective's slope bound 2 / min speed.
      doc["accuracy"] = sig12(4.0 / (grid * min_v));
      break;
    }
  }
  return doc;
}

void emit(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"message relay solvers, online protocol simulator and "
               "competitive-ratio harness"};
  app.require_subcommand(1);

  // --- solve ---------------------------------------------------------
  std::string solve_input = "-";
  double solve_eps = 1e-6;
  CLI::App* solve =
      app.add_subcommand("solve", "offline optimal delivery time");
  solve->add_option("--input", solve_input, "instance JSON path ('-' stdin)");
  solve->add_option("--eps", solve_eps,
                    "additive accuracy for the broadcast search");

  // --- simulate ------------------------------------------------------
  std::string sim_input = "-";
  std::string sim_trace;
  CLI::App* sim =
      app.add_subcommand("simulate", "run the online protocol");
  sim->add_option("--input", sim_input, "instance JSON path ('-' stdin)");
  sim->add_option("--trace", sim_trace, "write event trace CSV to this path");

  // --- ratio ---------------------------------------------------------
  std::string ratio_input = "-";
  CLI::App* ratio =
      app.add_subcommand("ratio", "online / offline competitive ratio");
  ratio->add_option("--input", ratio_input, "instance JSON path ('-' stdin)");

  // --- sweep ---------------------------------------------------------
  std::string sweep_variant = "pony";
  int sweep_n = 4;
  int sweep_trials = 100;
  std::uint64_t sweep_seed = 0;
  double sweep_lo = 0.1, sweep_hi = 2.0, sweep_tol = 1e-6;
  bool sweep_rows = false;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "competitive ratios over seeded random instances");
  sweep_cmd->add_option("--variant", sweep_variant,
                        "pony | half_broadcast | broadcast");
  sweep_cmd->add_option("--n", sweep_n, "max robots per instance");
  sweep_cmd->add_option("--trials", sweep_trials, "instance count");
  sweep_cmd->add_option("--seed", sweep_seed, "master seed");
  sweep_cmd->add_option("--speed-lo", sweep_lo, "min speed");
  sweep_cmd->add_option("--speed-hi", sweep_hi, "max speed");
  sweep_cmd->add_option("--tol", sweep_tol, "violation slack over the bound");
  sweep_cmd->add_flag("--rows", sweep_rows, "include per-instance rows");

  // --- lb-family -----------------------------------------------------
  int lb_samples = 51;
  CLI::App* lb = app.add_subcommand(
      "lb-family", "two-robot adversary family ratio table");
  lb->add_option("--samples", lb_samples, "sample count over y in [0, 1/2]");

  // --- gen -----------------------------------------------------------
  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  CLI::App* gen_hb = gen->add_subcommand(
      "adversary-hb", "two-robot half-broadcast worst case");
  double gen_y = 0.0;
  CLI::App* gen_bc = gen->add_subcommand(
      "adversary-bc", "two-robot broadcast adversary family member");
  gen_bc->add_option("--y", gen_y, "family parameter in [0, 1/2]");
  std::string gen_variant = "pony";
  int gen_n = 1;
  std::uint64_t gen_seed = 0;
  double gen_lo = 0.1, gen_hi = 2.0;
  CLI::App* gen_random_cmd =
      gen->add_subcommand("random", "seeded random instance");
  gen_random_cmd->add_option("--variant", gen_variant,
                             "pony | half_broadcast | broadcast");
  gen_random_cmd->add_option("--n", gen_n, "robot count");
  gen_random_cmd->add_option("--seed", gen_seed, "seed");
  gen_random_cmd->add_option("--speed-lo", gen_lo, "min speed");
  gen_random_cmd->add_option("--speed-hi", gen_hi, "max speed");

  // --- oracle --------------------------------------------------------
  std::string oracle_input = "-";
  int oracle_grid = 10000;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force reference solver for small instances");
  oracle_cmd->add_option("--input", oracle_input,
                         "instance JSON path ('-' stdin)");
  oracle_cmd->add_option("--grid", oracle_grid,
                         "handover-position grid for broadcast");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // any usage problem maps to a single documented code
  }

  try {
    if (solve->parsed()) {
      emit(solve_json(load_instance(solve_input), solve_eps));
    } else if (sim->parsed()) {
      emit(simulate_json(load_instance(sim_input), sim_trace));
    } else if (ratio->parsed()) {
      emit(ratio_json(load_instance(ratio_input)));
    } else if (sweep_cmd->parsed()) {
      pony::RatioReport report =
          pony::sweep(variant_from_name(sweep_variant), sweep_n, sweep_trials,
                      sweep_seed, sweep_lo, sweep_hi, sweep_tol);
      emit(sweep_json(report, sweep_rows));
      if (!report.violations.empty()) return kExitViolation;
    } else if (lb->parsed()) {
      emit(lb_family_json(pony::lb_family_sweep(lb_samples)));
    } else if (gen->parsed()) {
      pony::ProblemInstance inst;
      if (gen_hb->parsed()) {
        inst = pony::gen_hb_adversary();
      } else if (gen_bc->parsed()) {
        inst = pony::gen_bc_adversary(gen_y);
      } else {
        inst = pony::gen_random(variant_from_name(gen_variant), gen_n,
                                gen_seed, gen_lo, gen_hi);
      }
      std::cout << pony::serialize(inst) << "\n";
    } else if (oracle_cmd->parsed()) {
      emit(oracle_json(load_instance(oracle_input), oracle_grid));
    }
  } catch (const pony::Error& e) {
    std::cerr << e.what() << "\n";  // message already carries the error name
    return kExitValidation;
  }
  return kExitOk;
}
