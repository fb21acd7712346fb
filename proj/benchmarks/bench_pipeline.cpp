#include <benchmark/benchmark.h>

#include "webiso/analysis.hpp"
#include "webiso/atlas.hpp"

using namespace webiso;

static WebSpec diagonal_web(int order) {
  const AtlasEntry& e = atlas_entry("slDD-n3");
  return WebSpec(e.n, e.f, e.base, order);
}

static void BM_SolveDiagonalWeb(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SymmetrySolution s = solve_symmetries(diagonal_web(order));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SolveDiagonalWeb)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_NormalForm(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    NormalFormResult r = compute_normal_form(diagonal_web(order));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_NormalForm)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_AnalyzeNExample(benchmark::State& state) {
  const AtlasEntry& e = atlas_entry("n-example-n4");
  const WebSpec w(e.n, e.f, e.base, e.order);
  for (auto _ : state) {
    AnalysisReport a = analyze_web(w);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_AnalyzeNExample)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
