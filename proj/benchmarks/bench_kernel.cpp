#include <benchmark/benchmark.h>

#include "algdiag/cartier.hpp"
#include "algdiag/diagrat.hpp"
#include "algdiag/exprparse.hpp"

namespace {

using namespace algdiag;

void BM_RationalKernelThueMorse(benchmark::State& state) {
  const DiagonalRep rep = furstenberg_rep(parse_poly("(1+X)^3*Y^2+(1+X)^2*Y+X", Field::prime(2)));
  for (auto _ : state) benchmark::DoNotOptimize(rational_kernel(rep.num, rep.den));
}
BENCHMARK(BM_RationalKernelThueMorse);

void BM_RationalKernelF4(benchmark::State& state) {
  const Field& f = Field::finite(4);
  const BiPoly p = parse_poly("1+t*X*Y", f);
  const BiPoly q = parse_poly("1+X+t*Y+X^2*Y", f);
  for (auto _ : state) benchmark::DoNotOptimize(rational_kernel(p, q));
}
BENCHMARK(BM_RationalKernelF4);

void BM_DiagonalAutomaton(benchmark::State& state) {
  const DiagonalRep rep = furstenberg_rep(parse_poly("(1+X)^3*Y^2+(1+X)^2*Y+X", Field::prime(2)));
  const KernelAutomaton2D aut = rational_kernel(rep.num, rep.den);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(diagonal_automaton(aut)));
}
BENCHMARK(BM_DiagonalAutomaton);

}  // namespace

BENCHMARK_MAIN();
