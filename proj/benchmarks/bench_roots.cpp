#include <benchmark/benchmark.h>

#include "algdiag/exprparse.hpp"
#include "algdiag/roots.hpp"

namespace {

using namespace algdiag;

void BM_RootsThueMorse(benchmark::State& state) {
  const BiPoly p = parse_poly("(1+X)^3*Y^2+(1+X)^2*Y+X", Field::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(roots_automata(p, 256));
}
BENCHMARK(BM_RootsThueMorse);

void BM_RootsFiveState(benchmark::State& state) {
  const BiPoly p = parse_poly("Y^2+(1+X)*Y+X^2", Field::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(roots_automata(p, 256));
}
BENCHMARK(BM_RootsFiveState);

void BM_HenselFiveState(benchmark::State& state) {
  const BiPoly p = parse_poly("Y^2+(1+X)*Y+X^2", Field::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(hensel_root(p, Field::prime(2).zero(), state.range(0)));
}
BENCHMARK(BM_HenselFiveState)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
