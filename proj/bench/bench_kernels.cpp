// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "sidonlab/kernels.hpp"
#include "sidonlab/norms.hpp"

using namespace sidonlab;

namespace {

Polynomial cube_poly(int n, int d) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n * 100 + d));
  CoefficientTable t(n, d, Monotonicity::strictly_increasing);
  for_each_index(IndexSpace::full(d, n, Monotonicity::strictly_increasing),
                 [&](std::span<const int> v) { t.set({v.begin(), v.end()}, rng() % 2 ? 1.0 : -1.0); });
  return Polynomial(Domain::cube, t);
}

Polynomial torus_poly(int n, int d) {
  CoefficientTable t(n, d, Monotonicity::non_decreasing);
  const auto ph = random_phases(static_cast<int>(to_double(card_space(IndexSpace::full(d, n, Monotonicity::non_decreasing)))), 9);
  std::size_t i = 0;
  for_each_index(IndexSpace::full(d, n, Monotonicity::non_decreasing),
                 [&](std::span<const int> v) { t.set({v.begin(), v.end()}, std::polar(1.0, ph[i++])); });
  return Polynomial(Domain::torus, t);
}

std::vector<std::vector<double>> starts(int n, int count) {
  std::vector<std::vector<double>> s;
  for (int r = 0; r < count; ++r) s.push_back(random_phases(n, static_cast<std::uint64_t>(r)));
  return s;
}

void BM_CubeArgmaxSerial(benchmark::State& st) {
  const auto p = cube_poly(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::cube_argmax_serial(p));
}
void BM_CubeArgmaxParallel(benchmark::State& st) {
  const auto p = cube_poly(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::cube_argmax_parallel(p));
}
BENCHMARK(BM_CubeArgmaxSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubeArgmaxParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_MultistartSerial(benchmark::State& st) {
  const auto p = torus_poly(8, 3);
  const auto s = starts(8, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multistart_serial(p, s, 200, 1e-10));
}
void BM_MultistartParallel(benchmark::State& st) {
  const auto p = torus_poly(8, 3);
  const auto s = starts(8, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multistart_parallel(p, s, 200, 1e-10));
}
BENCHMARK(BM_MultistartSerial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultistartParallel)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BleiSerial(benchmark::State& st) {
  const auto p = torus_poly(static_cast<int>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::blei_terms_serial(p.coefficients(), 2));
}
void BM_BleiParallel(benchmark::State& st) {
  const auto p = torus_poly(static_cast<int>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::blei_terms_parallel(p.coefficients(), 2));
}
BENCHMARK(BM_BleiSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BleiParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
