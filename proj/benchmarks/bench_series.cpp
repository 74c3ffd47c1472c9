#include <benchmark/benchmark.h>

#include "sptcrank/analytic.hpp"
#include "sptcrank/crank_table.hpp"
#include "sptcrank/generating.hpp"

using namespace sptcrank;

static void BM_qs_mul(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const QSeries a = gen::gen_partitions(N);
  const QSeries b = gen::gen_spt_omega(N);
  for (auto _ : state) benchmark::DoNotOptimize(qs_mul(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_qs_mul)->RangeMultiplier(2)->Range(250, 2000)->Complexity();

static void BM_euler_inverse(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen::gen_euler_inverse(2, N));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_euler_inverse)->RangeMultiplier(2)->Range(500, 8000)->Complexity();

static void BM_spt_omega(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen::gen_spt_omega(N));
}
BENCHMARK(BM_spt_omega)->Arg(500)->Arg(2000);

static void BM_crank_row(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen::gen_SC1_m(1, N));
}
BENCHMARK(BM_crank_row)->Arg(1000)->Arg(4000);

static void BM_crank_table(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen::CrankTable::build(gen::Family::C1, static_cast<int>(N) - 1, N));
  }
}
BENCHMARK(BM_crank_table)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_mock_identity(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen::verify_mock_identity(N));
}
BENCHMARK(BM_mock_identity)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_eval_h(benchmark::State& state) {
  const auto p = analytic::HParams::from_halves(0.5, 1.5);
  const analytic::ComplexPoint pt(0.0, std::ldexp(1.0, -static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(analytic::eval_h(p, pt));
}
BENCHMARK(BM_eval_h)->DenseRange(4, 10, 3);
BENCHMARK_MAIN();
