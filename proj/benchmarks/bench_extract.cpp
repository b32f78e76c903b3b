#include <benchmark/benchmark.h>

#include "algdiag/exprparse.hpp"
#include "algdiag/extract.hpp"

namespace {

using namespace algdiag;

const FixedPointProblem& catalan() {
  static const FixedPointProblem p(parse_poly("X+Y^2", Field::rationals()));
  return p;
}

const FixedPointProblem& thue_morse() {
  static const FixedPointProblem p(parse_poly("X + X*Y + (1+X)^3*Y^2", Field::prime(2)));
  return p;
}

void BM_FsCatalanQ(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fs_coefficients(catalan(), state.range(0)));
}
BENCHMARK(BM_FsCatalanQ)->Arg(32)->Arg(64)->Arg(128);

void BM_FixedPointCatalanQ(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fixed_point_coefficients(catalan(), state.range(0)));
}
BENCHMARK(BM_FixedPointCatalanQ)->Arg(32)->Arg(64)->Arg(128);

void BM_FsF2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fs_coefficients(thue_morse(), state.range(0)));
}
BENCHMARK(BM_FsF2)->Arg(64)->Arg(256);

void BM_FixedPointF2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fixed_point_coefficients(thue_morse(), state.range(0)));
}
BENCHMARK(BM_FixedPointF2)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
