#include <benchmark/benchmark.h>

#include "qloop/chain.hpp"
#include "qloop/divpow.hpp"
#include "qloop/identity.hpp"
#include "qloop/operator_store.hpp"
#include "qloop/qcomb.hpp"
#include "qloop/serre.hpp"

using namespace qloop;

static void BM_GaussBinomial(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_binomial(s, s / 2, Flavor::q));
}
BENCHMARK(BM_GaussBinomial)->Arg(16)->Arg(32)->Arg(64);

static void BM_CycloReduce(benchmark::State& state) {
  const auto& ring = CyclotomicRing::get(static_cast<int>(state.range(0)));
  const auto p = q_factorial(24);
  for (auto _ : state) benchmark::DoNotOptimize(CycloElem::reduce(ring, p));
}
BENCHMARK(BM_CycloReduce)->Arg(2)->Arg(5)->Arg(12);

static void BM_ChainGenerators(benchmark::State& state) {
  const auto rep = build_site_rep(Backend::spin_half, 2);
  const int length = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_chain_generators(rep, length));
}
BENCHMARK(BM_ChainGenerators)->Arg(6)->Arg(10);

static void BM_DividedPower(benchmark::State& state) {
  const auto ops = build_chain_generators(build_site_rep(Backend::spin_half, 2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(divided_power(ops.E0, 4, Norm::q_fact));
}
BENCHMARK(BM_DividedPower)->Arg(6)->Arg(10);

static void BM_NestedSerre(benchmark::State& state) {
  StoreConfig cfg;
  cfg.n_param = 2;
  cfg.length = static_cast<int>(state.range(0));
  cfg.max_order = 4;
  const auto specs = nested_specs(1, 2, "x");
  for (auto _ : state) {
    OperatorStore<CycloElem> store(cfg);
    for (const auto& spec : specs) benchmark::DoNotOptimize(evaluate(spec, store));
  }
}
BENCHMARK(BM_NestedSerre)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
