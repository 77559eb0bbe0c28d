#include <benchmark/benchmark.h>

#include "folcan/bounds.hpp"
#include "folcan/linalg.hpp"
#include "folcan/surface_model.hpp"

namespace {

using namespace folcan;

SymmetricPairing a_chain(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -2;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return SymmetricPairing(std::move(m));
}

void BM_Signature(benchmark::State& state) {
  const auto g = a_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signature(g));
}
BENCHMARK(BM_Signature)->Arg(4)->Arg(10)->Arg(24);

void BM_SolveLinear(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = a_chain(n);
  RationalVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = Rational(static_cast<long>(i) - 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_linear(g, rhs));
}
BENCHMARK(BM_SolveLinear)->Arg(4)->Arg(10)->Arg(24);

void BM_MumfordPullback(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto chain = a_chain(k);
  RationalMatrix g(k + 1, k + 1);
  g(0, 0) = -1;
  g(0, 1) = g(1, 0) = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i + 1, j + 1) = chain(i, j);
  std::vector<std::string> labels{"S"};
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i <= k; ++i) {
    labels.push_back("E" + std::to_string(i));
    idx.push_back(i);
  }
  const ResolutionData res(SurfaceModel(labels, SymmetricPairing(std::move(g))), idx);
  RationalVector strict(k + 1);
  strict[0] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mumford_pullback(res, strict));
}
BENCHMARK(BM_MumfordPullback)->Arg(2)->Arg(10);

void BM_EnumerateHilbert(benchmark::State& state) {
  const EnumerationQuery q{1, 0, 2, {0, 1, 2}, static_cast<std::size_t>(state.range(0)), true, 1,
                           IndexFilter::Equal};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_hilbert(q, 2));
}
BENCHMARK(BM_EnumerateHilbert)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
