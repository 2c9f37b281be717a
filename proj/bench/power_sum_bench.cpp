#include <benchmark/benchmark.h>

#include "pasai/characters/dirichlet.hpp"
#include "pasai/kernels/power_sum.hpp"

using namespace pasai;

namespace {

kernels::PowerSumTask make_task(long R, int buckets) {
  kernels::PowerSumTask t;
  t.bucket.assign(static_cast<std::size_t>(R + 1), 0);
  t.bucket[0] = -1;
  t.buckets = buckets;
  for (long n = 1; n <= R; ++n) t.bucket[static_cast<std::size_t>(n)] = static_cast<int>(n % buckets);
  t.prec = 128;
  t.s = BigComplex(BigFloat(7L, t.prec), BigFloat(Rational(1, 3), t.prec));
  return t;
}

void BM_PowerSumSerial(benchmark::State& state) {
  auto task = make_task(state.range(0), 9);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bucketed_power_sum_serial(task));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PowerSumOpenMP(benchmark::State& state) {
  auto task = make_task(state.range(0), 9);
  kernels::set_parallelism(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bucketed_power_sum(task));
  kernels::set_parallelism(0);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LTruncatedSerial(benchmark::State& state) {
  auto chi = enumerate_characters(25)[3];
  BigComplex s(BigFloat(4L, 128));
  for (auto _ : state) benchmark::DoNotOptimize(L_truncated_serial(s, chi, state.range(0), 128));
}

void BM_LTruncatedOpenMP(benchmark::State& state) {
  auto chi = enumerate_characters(25)[3];
  BigComplex s(BigFloat(4L, 128));
  for (auto _ : state) benchmark::DoNotOptimize(L_truncated(s, chi, state.range(0), 128));
}

}  // namespace

BENCHMARK(BM_PowerSumSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerSumOpenMP)->ArgsProduct({{10000, 100000}, {1, 2, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LTruncatedSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LTruncatedOpenMP)->Arg(100000)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
