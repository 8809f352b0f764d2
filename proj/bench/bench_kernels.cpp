// Serial reference path vs OpenMP path on the heavier checks.

#include <benchmark/benchmark.h>

#include "hasse/verifier.hpp"

using namespace hasse;

namespace {

VerifyConfig config_for(benchmark::State& state) {
  VerifyConfig c;
  c.exec = state.range(0) ? Execution::parallel : Execution::serial;
  c.degree_bound = 6;
  c.order_bound = 6;
  c.rational_count = 20;
  return c;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_H8(benchmark::State& state) {
  const auto c = config_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom_scheme(Scheme::H8, Params(3, 2), c));
  label(state);
}

void BM_IterativityReplay(benchmark::State& state) {
  const auto c = config_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_iterativity_replay(Params(2, 3), c));
  label(state);
}

void BM_Strictness(benchmark::State& state) {
  const auto c = config_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(strictness_kernel_check(Params(3, 2), 6, c.exec));
  label(state);
}

void BM_PBasis(benchmark::State& state) {
  const auto c = config_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(pbasis_equivalence_check(Params(2, 2), c));
  label(state);
}

}  // namespace

BENCHMARK(BM_H8)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IterativityReplay)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Strictness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PBasis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
