#include <benchmark/benchmark.h>

#include "factorinv/affine_monoid.hpp"
#include "factorinv/block_monoid.hpp"
#include "factorinv/corpus.hpp"
#include "factorinv/diophantine.hpp"
#include "factorinv/invariants.hpp"
#include "factorinv/presentations.hpp"
#include "factorinv/unions.hpp"

using namespace factorinv;

namespace {

void BM_HilbertBasisLinear(benchmark::State& state) {
  // 2x1 + 3x2 + 5x3 = 4y1 + 7y2
  DiophantineSystem sys(5);
  sys.add_equation({2, 3, 5, -4, -7});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(sys));
}
BENCHMARK(BM_HilbertBasisLinear)->Unit(benchmark::kMillisecond);

void BM_OmegaParity(benchmark::State& state) {
  Monoid m{AffineMonoid(3, {{{1, 0, 1}, 2, 0}, {{0, 1, 1}, 2, 0}}, {})};
  for (auto _ : state) benchmark::DoNotOptimize(omega(m));
}
BENCHMARK(BM_OmegaParity)->Unit(benchmark::kMicrosecond);

void BM_TameDegree(benchmark::State& state) {
  Monoid m{NumericalMonoid({19, 46, 391})};
  for (auto _ : state) benchmark::DoNotOptimize(tame_degree(m));
}
BENCHMARK(BM_TameDegree)->Unit(benchmark::kMillisecond);

void BM_Catenary(benchmark::State& state) {
  Monoid m{NumericalMonoid({11, 13, 17, 19})};
  for (auto _ : state) benchmark::DoNotOptimize(catenary(m));
}
BENCHMARK(BM_Catenary)->Unit(benchmark::kMillisecond);

void BM_CorpusSearch(benchmark::State& state) {
  const Int f_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(search_frobenius(f_max, 1));
}
BENCHMARK(BM_CorpusSearch)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_Unions(benchmark::State& state) {
  NumericalMonoid s({4, 10, 21});
  for (auto _ : state) benchmark::DoNotOptimize(unions_up_to(s, state.range(0)));
}
BENCHMARK(BM_Unions)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_BlockMonoidSuite(benchmark::State& state) {
  auto g = FiniteAbelianGroup::parse("C2xC2xC2");
  for (auto _ : state) benchmark::DoNotOptimize(group_suite(g));
}
BENCHMARK(BM_BlockMonoidSuite)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
