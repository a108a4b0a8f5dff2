#include <benchmark/benchmark.h>

#include "stacklab/asym.hpp"
#include "stacklab/combinat.hpp"
#include "stacklab/genfun.hpp"
#include "stacklab/series.hpp"

namespace {

using namespace stacklab;

void BM_PsMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PowerSeries a = series(Variant::P, n);
  for (auto _ : state) benchmark::DoNotOptimize(ps_mul(a, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PsMul)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);

void BM_Series(benchmark::State& state, Variant v) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series(v, n));
}
BENCHMARK_CAPTURE(BM_Series, s, Variant::S)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Series, h, Variant::H)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Series, dm, Variant::DM)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Series, fphi, Variant::FPHI)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(combinat::enumerate(combinat::StackVariant::Stack, n));
}
BENCHMARK(BM_Enumerate)->DenseRange(10, 25, 5)->Unit(benchmark::kMillisecond);

void BM_ContourA(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(asym::contour_A(0.05));
}
BENCHMARK(BM_ContourA)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
