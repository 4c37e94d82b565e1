#include <benchmark/benchmark.h>

#include <random>

#include "qmask/entanglement.hpp"
#include "qmask/masking.hpp"
#include "qmask/optimizer.hpp"
#include "qmask/states.hpp"

using namespace qmask;

namespace {

// Full-rank two-qubit state drawn as G G^dagger / tr.
DensityMatrix random_density(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  ComplexMatrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = Complex(n(rng), n(rng));
  ComplexMatrix rho = g * dagger(g);
  rho = (1.0 / rho.trace().real()) * rho;
  return DensityMatrix(rho);
}

void BM_HermitianEigensystem(benchmark::State& state) {
  const ComplexMatrix h = random_density(1).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(h));
}
BENCHMARK(BM_HermitianEigensystem);

void BM_Concurrence(benchmark::State& state) {
  const DensityMatrix rho = random_density(2);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_MixtureConcurrence(benchmark::State& state) {
  const ComplexMatrix& u = canonical_orthogonal_masker();
  const PureState2Q a = apply_masker(u, QubitState::zero(), QubitState::zero());
  const PureState2Q b = apply_masker(u, QubitState::one(), QubitState::zero());
  for (auto _ : state) benchmark::DoNotOptimize(mixture_concurrence(a, b, 0.3));
}
BENCHMARK(BM_MixtureConcurrence);

void BM_CartanUnitary(benchmark::State& state) {
  MaskerParams p;
  p.alpha_x = 0.3;
  p.alpha_y = 0.2;
  p.alpha_z = 0.1;
  p.euler_a = {0.4, 1.1, -0.7};
  p.euler_b = {2.0, 0.5, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(cartan_unitary(p));
}
BENCHMARK(BM_CartanUnitary);

void BM_FindMaskerSingleRestart(benchmark::State& state) {
  OptimizerConfig c;
  c.restarts = 1;
  c.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(find_masker(QubitState::zero(), QubitState::one(), c));
}
BENCHMARK(BM_FindMaskerSingleRestart)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
