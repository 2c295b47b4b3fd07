#include <benchmark/benchmark.h>

#include "ponyexpress/bc_solver.hpp"
#include "ponyexpress/generators.hpp"
#include "ponyexpress/hb_solver.hpp"
#include "ponyexpress/online_sim.hpp"
#include "ponyexpress/pony_solver.hpp"
#include "ponyexpress/validate.hpp"

namespace {

pony::ValidatedInstance make(pony::Variant variant, int n) {
  return pony::validate(pony::gen_random(variant, n, 7));
}

void BM_SolvePony(benchmark::State& state) {
  const auto inst = make(pony::Variant::kPony, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pony::solve_pony(inst).objective);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolvePony)->RangeMultiplier(4)->Range(64, 1 << 18)->Complexity();

void BM_SolveHalfBroadcast(benchmark::State& state) {
  const auto inst =
      make(pony::Variant::kHalfBroadcast, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pony::solve_half_broadcast(inst).objective);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveHalfBroadcast)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_SolveBroadcast(benchmark::State& state) {
  const auto inst =
      make(pony::Variant::kBroadcast, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pony::solve_broadcast(inst, 1e-6).objective);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveBroadcast)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_Simulate(benchmark::State& state) {
  const auto inst =
      make(pony::Variant::kBroadcast, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pony::simulate(inst).objective);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Simulate)->RangeMultiplier(2)->Range(2, 128)->Complexity();

}  // namespace

BENCHMARK_MAIN();
