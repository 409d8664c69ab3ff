#include <benchmark/benchmark.h>

#include <random>

#include "nehari/spectral.hpp"
#include "nehari/symmetry.hpp"
#include "nehari/variational.hpp"

using namespace nehari;

namespace {

DiscreteGeometry make_geom(int nr, int ns) {
  return DiscreteGeometry::build(ManifoldModel(3, PsiProfile::hyperbolic(1.0)), 6.0, nr, ns);
}

AxisymmetricField make_random(const DiscreteGeometry& geom) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  AxisymmetricField u = geom.make_field();
  for (double& v : u.v) v = dist(rng);
  u.symmetrize_pole();
  for (int j = 0; j <= geom.ns(); ++j) u.at(geom.nr(), j) = 0.0;
  return u;
}

void BM_integrate(benchmark::State& state) {
  const auto geom = make_geom(static_cast<int>(state.range(0)), 64);
  const auto u = make_random(geom);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(u, geom));
}
BENCHMARK(BM_integrate)->Arg(128)->Arg(256)->Arg(512);

void BM_dirichlet_energy(benchmark::State& state) {
  const auto geom = make_geom(static_cast<int>(state.range(0)), 64);
  const auto u = make_random(geom);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_energy(u, geom));
}
BENCHMARK(BM_dirichlet_energy)->Arg(128)->Arg(256)->Arg(512);

void BM_lambda1_ball(benchmark::State& state) {
  const ManifoldModel m(3, PsiProfile::hyperbolic(1.0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lambda1_ball(m, 8.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_lambda1_ball)->Arg(500)->Arg(2000);

void BM_nehari_project(benchmark::State& state) {
  const auto geom = make_geom(128, 32);
  const Nonlinearity f(0.3, 2.0, WeightSpec::phi_power(1.0), 3.0);
  const auto v = make_random(geom);
  for (auto _ : state) benchmark::DoNotOptimize(nehari_project(v, geom, f));
}
BENCHMARK(BM_nehari_project);

void BM_polarize(benchmark::State& state) {
  const auto geom = make_geom(256, 64);
  const auto u = make_random(geom);
  for (auto _ : state) benchmark::DoNotOptimize(polarize(u, geom));
}
BENCHMARK(BM_polarize);

void BM_solve_small(benchmark::State& state) {
  const auto geom = make_geom(64, 16);
  const Nonlinearity f(0.0, 2.0, WeightSpec::phi_power(1.0), 3.0);
  SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(solve_ground_state(geom, f, cfg));
}
BENCHMARK(BM_solve_small)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
