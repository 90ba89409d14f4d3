#include <benchmark/benchmark.h>

#include "hbl/catalog.hpp"
#include "hbl/suites.hpp"

using namespace hbl;

namespace {

const GroupTable& group_of_order(std::size_t n) {
  static const auto cat = group_catalog(8);
  for (const auto& g : cat) {
    if (g.table.n == n) return g.table;
  }
  throw std::runtime_error("no group");
}

void BM_SolveAntipode(benchmark::State& state) {
  const HopfAlgebra h = group_algebra(group_of_order(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_antipode(h.bi));
}
BENCHMARK(BM_SolveAntipode)->Arg(4)->Arg(6)->Arg(8);

void BM_CheckHopf(benchmark::State& state) {
  const HopfAlgebra h = group_algebra(group_of_order(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_hopf(h));
}
BENCHMARK(BM_CheckHopf)->Arg(4)->Arg(8);

void BM_EnumerateSkewBraces(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_skew_braces(n));
}
BENCHMARK(BM_EnumerateSkewBraces)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_EnumerateSkewBracesNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_skew_braces_naive(n));
}
BENCHMARK(BM_EnumerateSkewBracesNaive)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_BraceSmash(benchmark::State& state) {
  const auto braces = linearized_braces(static_cast<std::size_t>(state.range(0)));
  const HopfBrace& b = braces.back().brace;
  for (auto _ : state) benchmark::DoNotOptimize(brace_smash(b));
}
BENCHMARK(BM_BraceSmash)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CheckZhuRegular(benchmark::State& state) {
  const HopfBrace b = op_brace(sweedler_h4());
  const BraceModule m(b.space(), b.h1().prod(), b.h2().prod(), b);
  for (auto _ : state) benchmark::DoNotOptimize(check_zhu(m));
}
BENCHMARK(BM_CheckZhuRegular)->Unit(benchmark::kMillisecond);

void BM_Mainth(benchmark::State& state) {
  const auto braces = brace_catalog(4);
  for (auto _ : state) benchmark::DoNotOptimize(suite_mainth(braces));
}
BENCHMARK(BM_Mainth)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
