#include <benchmark/benchmark.h>

#include "tlq/idempotent.hpp"
#include "tlq/qnum.hpp"
#include "tlq/rootlimit.hpp"
#include "tlq/uq_pairing.hpp"

using namespace tlq;

static void BM_QBinomial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_binomial(k, k / 2));
}
BENCHMARK(BM_QBinomial)->Arg(8)->Arg(16)->Arg(32);

static void BM_Coefficient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int i = 0; i <= n / 2; ++i) benchmark::DoNotOptimize(coeff_a(i, 0, 0));
}
BENCHMARK(BM_Coefficient)->Arg(8)->Arg(16)->Arg(24);

static void BM_OrderAtRoot(benchmark::State& state) {
  const RatFunc f = coeff_a(9, 6, 0);
  const RootSpec root(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(order_at_root(f, root));
}
BENCHMARK(BM_OrderAtRoot)->Arg(3)->Arg(5)->Arg(7);

static void BM_Idempotent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(idempotent_z(n, 0, 0));
}
BENCHMARK(BM_Idempotent)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyFamilySymbolic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_family(n, 0, VerifyMode::Symbolic));
}
BENCHMARK(BM_VerifyFamilySymbolic)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyFamilyProbe(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_family(n, 0, VerifyMode::Probe));
}
BENCHMARK(BM_VerifyFamilyProbe)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ProjectorFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RootSpec root(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(projector_family(n, 0, root));
}
BENCHMARK(BM_ProjectorFamily)->Args({6, 3})->Args({8, 3})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_CycleDiagram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cycle_diagram(30, 18, 4));
}
BENCHMARK(BM_CycleDiagram)->Unit(benchmark::kMicrosecond);

static void BM_Multiplicities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicities(n, RootSpec(5)));
}
BENCHMARK(BM_Multiplicities)->Arg(20)->Arg(40)->Arg(62)->Unit(benchmark::kMicrosecond);

static void BM_UqPairing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uq_pair_decompose(n, RootSpec(3), false));
}
BENCHMARK(BM_UqPairing)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
