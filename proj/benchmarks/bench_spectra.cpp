#include <benchmark/benchmark.h>

#include <random>

#include "isospec/eigensolvers.hpp"
#include "isospec/polynomials.hpp"
#include "isospec/rep_spectra.hpp"
#include "isospec/sweep.hpp"

namespace {

void TridiagonalEigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<double> d(n), e(n - 1);
  for (auto& x : d) x = dist(rng);
  for (auto& x : e) x = dist(rng);
  const isospec::SymTridiagonal t(d, e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(isospec::eigvals_tridiagonal(t));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(TridiagonalEigenvalues)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void OmegaAssemblyAndEig(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const isospec::CasimirMatrix block = isospec::omega1(m, 0.3, 1.0);
    benchmark::DoNotOptimize(isospec::eigvals_tridiagonal(block.matrix));
  }
}
BENCHMARK(OmegaAssemblyAndEig)->DenseRange(1, 25, 6);

void IsotypicOracle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        isospec::isotypic_casimir(m, 0.3, 1.0, isospec::Bundle::eta1));
  }
}
BENCHMARK(IsotypicOracle)->DenseRange(2, 10, 2);

void EquivariantHarmonicDim(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        isospec::equivariant_harmonic_dim(degree, isospec::Bundle::eta1));
  }
}
BENCHMARK(EquivariantHarmonicDim)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void SweepGrid(benchmark::State& state) {
  isospec::SweepConfig config;
  config.bundles = {isospec::Bundle::eta1};
  config.m_max = 8;
  config.b_min = 0.05;
  config.b_max = 0.95;
  config.steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(isospec::run_sweep(config));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SweepGrid)->RangeMultiplier(4)->Range(16, 256)->Complexity()
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
