#include <benchmark/benchmark.h>

#include "webiso/expr.hpp"
#include "webiso/jets.hpp"

using namespace webiso;

static void BM_JetMultiply(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const Point base(n, Rational(0));
  std::string text = "1";
  for (std::size_t i = 1; i <= n; ++i) text += " + " + std::to_string(i) + "*x" + std::to_string(i);
  const Expression e = parse_expression("1/(" + text + ")", n);
  const MultiJet a = expand_to_jet(e, base, order);
  for (auto _ : state) {
    MultiJet p = a * a;
    benchmark::DoNotOptimize(p);
  }
  state.counters["monomials"] = static_cast<double>(a.basis()->size());
}
BENCHMARK(BM_JetMultiply)->Args({2, 10})->Args({3, 8})->Args({4, 8})->Args({7, 5})->Unit(benchmark::kMillisecond);

static void BM_ExpandRational(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Expression e = parse_expression("(x1*x2+x3*x4-x1*x3-x2*x4)/(x1*x2+x3*x4-x3*x2-x1*x4)", 4);
  const Point base = {Rational(0), Rational(1), Rational(2), Rational(3)};
  for (auto _ : state) {
    MultiJet j = expand_to_jet(e, base, order);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_ExpandRational)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_Reversion(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const UniJet e = series::expm1_at_zero(order);
  for (auto _ : state) {
    UniJet r = uni_reversion(e);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Reversion)->RangeMultiplier(2)->Range(8, 64);
