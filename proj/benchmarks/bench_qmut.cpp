#include "qmut/trace.hpp"
#include "qmut/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qmut;

Quiver b2() { return Quiver::from_arrows(5, {{3, 5}, {5, 2}, {2, 3}, {2, 1}, {4, 2}, {1, 5}}); }
Quiver a3() { return Quiver::from_arrows(3, {{1, 2}, {3, 2}}); }

void BM_QBinom(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state)
    for (int k = 0; k <= m; ++k) benchmark::DoNotOptimize(qbinom(m, k));
}
BENCHMARK(BM_QBinom)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesMulDilog(benchmark::State& state) {
  const auto form = make_form(Quiver::from_arrows(2, {{1, 2}}));
  const int D = static_cast<int>(state.range(0));
  const Series x = dilog_series(form, {1, 0}, 0, Sign::Plus, D);
  const Series y = dilog_series(form, {0, 1}, 0, Sign::Plus, D);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(x, y));
}
BENCHMARK(BM_SeriesMulDilog)->Arg(4)->Arg(8)->Arg(12);

void BM_PartitionFunctionB2(benchmark::State& state) {
  const MutationTrace tr = run_trace(b2(), {2, 1, 3, 5, 2, 1, 3, 4, 2, 1, 3, 5});
  const std::vector<std::int64_t> r(5, 0);
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partition_function(tr, r, D));
}
BENCHMARK(BM_PartitionFunctionB2)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Theorem1A3(benchmark::State& state) {
  const std::vector<std::int64_t> r{0, 6, -2};
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_check(a3(), {1, 3, 2}, r, 4));
}
BENCHMARK(BM_Theorem1A3)->Unit(benchmark::kMillisecond);

void BM_Theorem2B2(benchmark::State& state) {
  const std::vector<std::int64_t> r(5, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        theorem2_check(b2(), {1, 3, 4, 2, 1, 3, 5, 2}, {2, 1, 3, 5, 2, 1, 3, 4, 2, 1, 3, 5}, r, 3));
}
BENCHMARK(BM_Theorem2B2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
