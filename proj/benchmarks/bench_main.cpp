#include <benchmark/benchmark.h>

#include "sudler/cotangent.hpp"
#include "sudler/limitfn.hpp"
#include "sudler/scan.hpp"
#include "sudler/sudler.hpp"

using namespace sudler;

namespace {

const ConvergentTable& table15() {
  static const ConvergentTable t = build_table(parse_alpha("[0;(15)]"), 10);
  return t;
}

void BM_LogSudler(benchmark::State& state) {
  const BigInt N(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(log_sudler(table15(), N));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LogSudler)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_Decompose(benchmark::State& state) {
  const ConvergentTable& t = table15();
  OstrowskiDigits d = encode(t, BigInt(static_cast<long>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(t, d));
}
BENCHMARK(BM_Decompose)->Arg(3000)->Arg(700000);

void BM_Scan(benchmark::State& state) {
  ScanOptions o;
  o.c_list = {0.5, 2, 64};
  o.parallelism = static_cast<unsigned>(state.range(1));
  const std::size_t K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(table15(), K, o));
  state.SetItemsProcessed(state.iterations() * table15().q_u64(K));
}
BENCHMARK(BM_Scan)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_VkGrid(benchmark::State& state) {
  std::vector<double> xs;
  for (int i = -95; i <= 95; ++i) xs.push_back(i / 100.0);
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(v_k_grid(table15(), k, xs));
}
BENCHMARK(BM_VkGrid)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EmpiricalLimit(benchmark::State& state) {
  std::vector<double> xs;
  for (int i = -100; i <= 100; ++i) xs.push_back(i / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(empirical_limit(table15(), 4, xs));
}
BENCHMARK(BM_EmpiricalLimit)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
