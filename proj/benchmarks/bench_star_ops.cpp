#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "srk/sampling.hpp"
#include "srk/star_series.hpp"

namespace {

srk::StarSeries random_series(int degree, std::uint64_t seed) {
  srk::Rng rng(seed);
  std::vector<srk::Quaternion> coeffs;
  coeffs.reserve(static_cast<size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) {
    coeffs.push_back(rng.ball(1.0));
  }
  return srk::StarSeries(std::move(coeffs));
}

void BM_StarMul(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const srk::StarSeries f = random_series(degree, 11);
  const srk::StarSeries g = random_series(degree, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(srk::star_mul(f, g));
  }
}
BENCHMARK(BM_StarMul)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Symmetrize(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const srk::StarSeries f = random_series(degree, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(srk::symmetrize(f));
  }
}
BENCHMARK(BM_Symmetrize)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Eval(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const srk::StarSeries f = random_series(degree, 14);
  srk::Rng rng(15);
  std::vector<srk::Quaternion> points;
  for (int n = 0; n < 256; ++n) {
    points.push_back(rng.ball(0.95));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(srk::eval(f, points[i & 255]));
    ++i;
  }
}
BENCHMARK(BM_Eval)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_DivideLinear(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  srk::Rng rng(16);
  const srk::Quaternion q0 = rng.ball(0.8);
  const srk::StarSeries f =
      srk::star_mul(srk::StarSeries::linear(q0), random_series(degree, 17));
  for (auto _ : state) {
    benchmark::DoNotOptimize(srk::divide_linear(f, q0));
  }
}
BENCHMARK(BM_DivideLinear)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
