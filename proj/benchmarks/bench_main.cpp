#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "nlft/herglotz.hpp"
#include "nlft/inverse.hpp"
#include "nlft/measure.hpp"
#include "nlft/transfer.hpp"

using namespace nlft;

namespace {

Measure constant_plus_atom(double T) {
  return Measure(ConstantDensity{1.0 / std::sqrt(2.0 * kPi)}, {{0.0, std::sqrt(2.0 * kPi)}}, 2.0 * T);
}

void BM_ForwardDiscrete(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  DiscretePotential pot{0.1, std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) pot.masses[k] = 0.5 * std::sin(0.37 * static_cast<double>(k));
  for (auto _ : state) benchmark::DoNotOptimize(forward_discrete(pot, cplx(0.7, 0.3)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardDiscrete)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_Toeplitz(benchmark::State& state, ToeplitzSolver solver) {
  const auto n = static_cast<std::size_t>(state.range(0));
  TrigMoments mom = trig_moments(constant_plus_atom(8.0 * kPi), n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_h11(mom, n, solver));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Toeplitz, levinson, ToeplitzSolver::levinson)->RangeMultiplier(2)->Range(16, 512)->Complexity();
BENCHMARK_CAPTURE(BM_Toeplitz, cholesky, ToeplitzSolver::cholesky)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_Opuc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  TrigMoments mom = trig_moments(constant_plus_atom(8.0 * kPi), n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(opuc_h11(mom, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Opuc)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_SchwarzPeriodicTable(benchmark::State& state) {
  const double T = 2.0;
  Measure mu(TableDensity{{-T, -0.5, 0.0, 0.5, T}, {0.2, 1.0, 3.0, 1.0, 0.2}}, {{0.0, 0.5}}, 2.0 * T);
  const double y = state.range(0) == 0 ? 1.0 : 1e-4;
  for (auto _ : state) benchmark::DoNotOptimize(schwarz_transform(mu, cplx(0.3, y)));
}
BENCHMARK(BM_SchwarzPeriodicTable)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
