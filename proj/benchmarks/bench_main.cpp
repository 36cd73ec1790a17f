#include <benchmark/benchmark.h>

#include <vector>

#include "semion/couplings.hpp"
#include "semion/ensemble.hpp"
#include "semion/lindblad.hpp"
#include "semion/star_hamiltonian.hpp"

namespace {

void BM_EvolveCleanChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const semion::HoppingMatrix h(std::vector<double>(n, 0.0), std::vector<double>(n - 1, -1.0));
  const auto rho0 = semion::DensityMatrix::localized(n, n / 2);
  const std::vector<double> times{10.0};
  for (auto _ : state) benchmark::DoNotOptimize(semion::evolve(h, 0.5, rho0, times));
}
BENCHMARK(BM_EvolveCleanChain)->Arg(5)->Arg(13)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_BaseEnsemble(benchmark::State& state) {
  const auto spec = semion::ChainSpec::centered(25);
  const std::vector<double> times{1.0, 100.0};
  semion::EnsembleOptions opt;
  opt.workers = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(semion::run_base_ensemble(spec, 0.5, 1024, times, 7, std::nullopt, opt));
}
BENCHMARK(BM_BaseEnsemble)->Unit(benchmark::kMillisecond);

void BM_TwoStarDense(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(semion::two_star_couplings(1.0, 0.6));
}
BENCHMARK(BM_TwoStarDense)->Unit(benchmark::kMillisecond);

void BM_TwoStarLanczosK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(semion::two_star_couplings(1.0, 1.45, 3.0));
}
BENCHMARK(BM_TwoStarLanczosK)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
