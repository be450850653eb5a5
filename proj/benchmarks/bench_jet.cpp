#include <benchmark/benchmark.h>

#include "jetfol/cdga.hpp"
#include "jetfol/obstruction.hpp"
#include "jetfol/random.hpp"

using namespace jetfol;

static void BM_Compose(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  Sampler s(7);
  auto f = s.jet(l, k, 1.0), g = s.jet(l, k, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_Compose)->ArgsProduct({{1, 2, 3}, {2, 3, 5}})->Unit(benchmark::kMicrosecond);

static void BM_Invert(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  Sampler s(8);
  auto f = s.jet(l, k, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(invert(f));
}
BENCHMARK(BM_Invert)->ArgsProduct({{1, 2, 3}, {2, 3, 5}})->Unit(benchmark::kMicrosecond);

static void BM_ExpLog(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  Sampler s(9);
  auto x = s.polyvector(l, 2, k, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(log_jet(exp_jet(x, k)));
}
BENCHMARK(BM_ExpLog)->ArgsProduct({{1, 2, 3}, {3, 5}})->Unit(benchmark::kMicrosecond);

static void BM_LiftSurface(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  Sampler s(10);
  const auto g = static_cast<std::size_t>(genus);
  auto rep = surface_rep_bridge(genus, s.scalars(g), s.scalars(g), s.scalars(g), s.scalars(g));
  for (auto _ : state) benchmark::DoNotOptimize(lift_obstruction(rep));
}
BENCHMARK(BM_LiftSurface)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_TwistedH1(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  auto p = surface_presentation(genus);
  auto act = ModuleAction::trivial(2 * genus, 10, Field::rational);
  for (auto _ : state) benchmark::DoNotOptimize(twisted_h1(p, act));
}
BENCHMARK(BM_TwistedH1)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
