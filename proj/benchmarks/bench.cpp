#include <benchmark/benchmark.h>

#include "dirmet/constructions.hpp"
#include "dirmet/distances.hpp"
#include "dirmet/gallery.hpp"
#include "dirmet_tools/ensemble.hpp"

using namespace dirmet;

namespace {

void BM_ZigzagTorus(benchmark::State& state) {
  gallery::GridSpec spec;
  spec.k = static_cast<std::size_t>(state.range(0));
  const auto s = gallery::flat_torus_grid(spec);
  for (auto _ : state) benchmark::DoNotOptimize(compute_zigzag(s));
  state.SetComplexityN(static_cast<long>(s.size()));
}
BENCHMARK(BM_ZigzagTorus)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Reachability(benchmark::State& state) {
  gallery::GridSpec spec;
  spec.k = static_cast<std::size_t>(state.range(0));
  const auto s = gallery::directed_square_grid(spec);
  for (auto _ : state) benchmark::DoNotOptimize(compute_reachability(s));
}
BENCHMARK(BM_Reachability)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

// Exhaustive correspondence search on random pairs with |X| = |Y| = n.
void BM_GhExhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = tools::stream(1, n);
  tools::EnsembleOptions opts;
  opts.min_points = opts.max_points = n;
  opts.connected = true;
  const DirectedMetricSpace x(tools::random_space(rng, opts));
  const DirectedMetricSpace y(tools::random_space(rng, opts));
  SearchBudget budget;
  budget.exhaustive_gh = n * n;
  for (auto _ : state) benchmark::DoNotOptimize(gh_distance(x, y, budget));
}
BENCHMARK(BM_GhExhaustive)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_DistortionSearch(benchmark::State& state) {
  const auto s = gallery::source_sink_interval(static_cast<std::size_t>(state.range(0)));
  const DirectedMetricSpace x(s), xr(reverse(s));
  for (auto _ : state) benchmark::DoNotOptimize(distortion_distance(x, xr));
}
BENCHMARK(BM_DistortionSearch)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DCorrespondence(benchmark::State& state) {
  const DirectedMetricSpace x(gallery::hollow_square(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dcorrespondence_distance(x, x));
}
BENCHMARK(BM_DCorrespondence)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
