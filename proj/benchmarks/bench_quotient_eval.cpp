#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "srk/mobius.hpp"
#include "srk/sampling.hpp"
#include "srk/zero_finder.hpp"

namespace {

srk::RegularQuotient blaschke_quotient(int factors, std::uint64_t seed) {
  srk::Rng rng(seed);
  srk::RegularQuotient out = srk::mobius_quotient(
      srk::make_regular_mobius(rng.ball(0.7), rng.unit_quaternion()));
  for (int n = 1; n < factors; ++n) {
    out = srk::star_mul(
        out, srk::mobius_quotient(srk::make_regular_mobius(
                 rng.ball(0.7), rng.unit_quaternion())));
  }
  return out;
}

std::vector<srk::Quaternion> sample_points(double radius, std::uint64_t seed) {
  srk::Rng rng(seed);
  std::vector<srk::Quaternion> points;
  for (int n = 0; n < 256; ++n) {
    points.push_back(rng.ball(radius));
  }
  return points;
}

void BM_EvalSymmRoute(benchmark::State& state) {
  const srk::RegularQuotient Q =
      blaschke_quotient(static_cast<int>(state.range(0)), 21);
  const std::vector<srk::Quaternion> points = sample_points(0.9, 22);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(srk::eval_quotient(Q, points[i & 255]));
    ++i;
  }
}
BENCHMARK(BM_EvalSymmRoute)->Arg(1)->Arg(2)->Arg(4);

void BM_EvalTransformRoute(benchmark::State& state) {
  const srk::RegularQuotient Q =
      blaschke_quotient(static_cast<int>(state.range(0)), 21);
  const std::vector<srk::Quaternion> points = sample_points(0.9, 22);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(srk::eval_via_transform(Q, points[i & 255]));
    ++i;
  }
}
BENCHMARK(BM_EvalTransformRoute)->Arg(1)->Arg(2)->Arg(4);

void BM_QuotientBuild(benchmark::State& state) {
  const int factors = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(blaschke_quotient(factors, 23));
  }
}
BENCHMARK(BM_QuotientBuild)->Arg(1)->Arg(2)->Arg(4);

void BM_LocateZeros(benchmark::State& state) {
  const srk::RegularQuotient Q =
      blaschke_quotient(static_cast<int>(state.range(0)), 24);
  const srk::StarSeries combined = Q.combined();
  for (auto _ : state) {
    benchmark::DoNotOptimize(srk::locate_zeros(combined, 1.0));
  }
}
BENCHMARK(BM_LocateZeros)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
