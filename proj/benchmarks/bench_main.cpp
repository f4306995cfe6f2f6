#include "dws/elliptic.hpp"
#include "dws/kernel.hpp"
#include "dws/qshuffle.hpp"
#include "dws/sampling.hpp"
#include "dws/signs.hpp"
#include "dws/theta.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dws;

static void BM_Theta(benchmark::State& state) {
  theta::ThetaParams p{0.5, 6, static_cast<int>(state.range(0))};
  star::cplx u(0.7, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta::theta(u, p));
    u += 1e-3;
  }
}
BENCHMARK(BM_Theta)->Arg(10)->Arg(40);

static void BM_StarPower(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  star::Algebra alg(3, theta::ThetaParams{0.5, 6, 40}, star::Convention::deformed(1.0));
  auto f = alg.power(a, 0, 1, {1});
  std::mt19937_64 rng(3);
  auto v = star::random_point(f.type(), rng, star::SampleBox{});
  star::Kappa kap{0.3, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(f(v, kap));
}
BENCHMARK(BM_StarPower)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_ScreeningKernel(benchmark::State& state) {
  orbit::Orbit orb(orbit::OrbitConfig{3, 6, {2, 1}});
  star::Algebra alg(3, theta::ThetaParams{0.5, 6, 40}, star::Convention::screening(6));
  auto spec = kernel::screening_spec(orb, orb.base_point(), orbit::Root{0, 1});
  auto f = kernel::screening_kernel(alg, spec);
  std::mt19937_64 rng(5);
  auto v = star::random_point(f.type(), rng, star::SampleBox{});
  auto kap = kernel::kappa_of(spec);
  for (auto _ : state) benchmark::DoNotOptimize(f(v, kap));
}
BENCHMARK(BM_ScreeningKernel)->Unit(benchmark::kMicrosecond);

static void BM_QShuffle(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  auto x = qsh::basic_X(4, 1, 2, {1, -1});
  for (auto _ : state) benchmark::DoNotOptimize(qsh::pow(x, a));
}
BENCHMARK(BM_QShuffle)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_SolveSigns(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  orbit::Orbit orb(n == 3 ? orbit::OrbitConfig{3, 6, {2, 1}} : orbit::OrbitConfig{4, 7, {2, 1, 1}});
  auto lat = orbit::Lattice::default_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(orbit::solve_signs(orb, 1, lat, orbit::KappaSource::Weight));
}
BENCHMARK(BM_SolveSigns)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_EnumerateOrbit(benchmark::State& state) {
  orbit::Orbit orb(orbit::OrbitConfig{4, 7, {2, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(orb.enumerate(orbit::Window{2, std::nullopt, std::nullopt}));
}
BENCHMARK(BM_EnumerateOrbit)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
