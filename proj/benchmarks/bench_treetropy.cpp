#include <benchmark/benchmark.h>

#include "treetropy/treetropy.hpp"

namespace {

using namespace treetropy;

Pattern star_input(int n) { return star_zero_pattern(n, 3); }

void BM_PathMatrix(benchmark::State& state) {
  const Pattern p = star_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(path_matrix(p));
}
BENCHMARK(BM_PathMatrix)->Arg(12)->Arg(24)->Arg(48)->Arg(96);

void BM_CollapseDecider(benchmark::State& state) {
  const Pattern p = star_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_collapsible(p));
}
BENCHMARK(BM_CollapseDecider)->Arg(12)->Arg(24)->Arg(48)->Arg(96);

void BM_SpectralDecider(benchmark::State& state) {
  const Pattern p = star_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_zero_entropy_spectral(p));
}
BENCHMARK(BM_SpectralDecider)->Arg(12)->Arg(24)->Arg(48)->Arg(96);

void BM_SpectralRadius(benchmark::State& state) {
  const PathMatrix m = path_matrix(parse_pattern_text("6: 0 1 | 4 5 | 1 2 3 4"));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(m));
}
BENCHMARK(BM_SpectralRadius);

void BM_StarZeroPattern(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(star_zero_pattern(64, 4));
}
BENCHMARK(BM_StarZeroPattern);

void BM_EnumeratePatterns(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_patterns(n));
}
BENCHMARK(BM_EnumeratePatterns)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_SearchZeroStar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_zero_star(8, 4));
}
BENCHMARK(BM_SearchZeroStar)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
