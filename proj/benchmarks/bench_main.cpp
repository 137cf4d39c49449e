#include <benchmark/benchmark.h>

#include <random>

#include "flagcodes/construct.hpp"

using namespace flagcodes;

static void BM_FieldMultiply(benchmark::State& state) {
  const FieldPtr f = make_field(2, static_cast<std::uint32_t>(state.range(0)));
  const Element mask = static_cast<Element>(f->order() - 1);
  Element acc = 1;
  Element x = 3;
  for (auto _ : state) {
    acc = f->mul(acc | 1, x);
    x = (x * 2654435761u) & mask;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMultiply)->Arg(4)->Arg(8)->Arg(16);

static void BM_Rref(benchmark::State& state) {
  const FieldPtr f = make_field(3, 1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Element>(rng() % 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(6)->Arg(12)->Arg(24);

static void BM_SpreadContext(benchmark::State& state) {
  const FieldPtr f = make_field(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_spread_context(f, 3, 2));
}
BENCHMARK(BM_SpreadContext)->Unit(benchmark::kMillisecond);

static void BM_LargeTableOrbit(benchmark::State& state) {
  const SpreadContext ctx = build_spread_context(make_field(2, 2), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(table_row(ctx, 1387));
}
BENCHMARK(BM_LargeTableOrbit)->Unit(benchmark::kMillisecond);

static void BM_OdfcCheck(benchmark::State& state) {
  const SpreadContext ctx = build_spread_context(make_field(3, 1), 3, 2);
  const FlagCode code = spread_type_max_odfc(ctx, 28).code;
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) == 0 ? is_odfc_by_definition(code) : is_odfc_componentwise(code));
  }
}
BENCHMARK(BM_OdfcCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
