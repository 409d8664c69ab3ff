#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <vector>

#include "nehari/spectral.hpp"
#include "nehari/variational.hpp"

using namespace nehari;

namespace {

AxisymmetricField random_field(const DiscreteGeometry& geom, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  AxisymmetricField u = geom.make_field();
  for (double& v : u.v) v = dist(rng);
  u.symmetrize_pole();
  for (int j = 0; j <= geom.ns(); ++j) u.at(geom.nr(), j) = 0.0;
  return u;
}

DiscreteGeometry small_hyperbolic() {
  return DiscreteGeometry::build(ManifoldModel(3, PsiProfile::hyperbolic(1.0)), 4.0, 48, 16);
}

}  // namespace

TEST_CASE("action: zero field and pure-power formula") {
  const auto geom = small_hyperbolic();
  const Nonlinearity f(0.0, 2.0, WeightSpec::constant(1.0), 3.0);
  CHECK(action(geom.make_field(), geom, f) == 0.0);

  const auto u = random_field(geom, 5u);
  const double A = dirichlet_energy(u, geom);
  const double B = integrate_pointwise(
      u, geom, [](double, double s) { return std::pow(std::abs(s), 3.0); });
  CHECK(action(u, geom, f) == doctest::Approx(0.5 * A - B / 3.0).epsilon(1e-12));
}

TEST_CASE("nehari_residual equals the fiber derivative of the action") {
  const auto geom = small_hyperbolic();
  const Nonlinearity f(0.2, 2.0, WeightSpec::phi_power(1.0), 3.0);
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto u = random_field(geom, seed);
    const double h = 1e-6;
    AxisymmetricField up = u, um = u;
    for (double& v : up.v) v *= 1.0 + h;
    for (double& v : um.v) v *= 1.0 - h;
    const double fd = (action(up, geom, f) - action(um, geom, f)) / (2.0 * h);
    CHECK(nehari_residual(u, geom, f) == doctest::Approx(fd).epsilon(1e-6));
  }
  CHECK_THROWS_AS(nehari_residual(geom.make_field(), geom, f), std::domain_error);
}

TEST_CASE("nehari_project: fixed point, scaling covariance, zero residual") {
  const auto geom = small_hyperbolic();
  const Nonlinearity f(0.0, 2.0, WeightSpec::phi_power(1.0), 3.0);
  const auto v = random_field(geom, 9u);
  const auto [t, u] = nehari_project(v, geom, f);
  CHECK(t > 0.0);
  CHECK(std::abs(nehari_residual(u, geom, f)) <
        1e-10 * std::max(1.0, dirichlet_energy(u, geom)));

  // Already on the manifold -> t = 1.
  const auto [t1, u1] = nehari_project(u, geom, f);
  CHECK(t1 == doctest::Approx(1.0).epsilon(1e-12));

  // Fiber invariance: t_{sv} = t_v / s, same projected field.
  AxisymmetricField sv = v;
  for (double& x : sv.v) x *= 2.5;
  const auto [ts, us] = nehari_project(sv, geom, f);
  CHECK(ts == doctest::Approx(t / 2.5).epsilon(1e-11));
  for (std::size_t k = 0; k < u.v.size(); ++k)
    CHECK(us.v[k] == doctest::Approx(u.v[k]).epsilon(1e-10));
}

TEST_CASE("fiber map has exactly one sign change on a log grid") {
  const auto geom =
      DiscreteGeometry::build(ManifoldModel(3, PsiProfile::hyperbolic(1.0)), 4.0, 32, 8);
  const Nonlinearity f(0.3, 2.0, WeightSpec::phi_power(1.0), 3.0);
  for (unsigned seed = 0; seed < 100; ++seed) {
    const auto v = random_field(geom, seed);
    const double D = dirichlet_energy(v, geom);
    int changes = 0;
    double prev_sign = 0.0;
    for (int k = 0; k <= 48; ++k) {
      const double t = std::pow(10.0, -6.0 + 12.0 * k / 48.0);
      AxisymmetricField tv = v;
      for (double& x : tv.v) x *= t;
      const double chi = nehari_residual(tv, geom, f);
      const double sign = (chi > 0.0) ? 1.0 : (chi < 0.0 ? -1.0 : 0.0);
      if (prev_sign != 0.0 && sign != 0.0 && sign != prev_sign) ++changes;
      if (sign != 0.0) prev_sign = sign;
      (void)D;
    }
    CHECK(changes == 1);
  }
}

TEST_CASE("hypothesis violations are reported as such") {
  const auto geom =
      DiscreteGeometry::build(ManifoldModel(3, PsiProfile::euclidean()), 1.0, 32, 8);
  // A rough random field has huge discrete Dirichlet energy, so use a smooth
  // bump: its Rayleigh quotient sits near lambda1(B_1) ~ pi^2 and lambda = 50
  // makes the quadratic part of the fiber map negative for every t.
  AxisymmetricField v = geom.make_field();
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j)
      v.at(i, j) = std::sin(3.14159265358979 * geom.r(i));
  const Nonlinearity bad_lambda(50.0, 2.0, WeightSpec::constant(1.0), 3.0);
  CHECK_THROWS_AS(nehari_project(v, geom, bad_lambda), HypothesisViolation);
  // vanishing weight kills the superlinear part.
  const Nonlinearity no_weight(0.0, 2.0, WeightSpec::constant(0.0), 3.0);
  CHECK_THROWS_AS(nehari_project(random_field(geom, 3u), geom, no_weight),
                  HypothesisViolation);
}

TEST_CASE("radial solve: contract assertions") {
  const auto geom =
      DiscreteGeometry::build(ManifoldModel(3, PsiProfile::euclidean()), 1.0, 128, 8);
  const Nonlinearity f(0.0, 3.0, WeightSpec::constant(1.0), 4.0);
  SolverConfig cfg;
  cfg.radial_only = true;
  cfg.init = SolverConfig::Init::RadialBump;
  std::vector<double> energies;
  cfg.iterate_hook = [&](const AxisymmetricField&, double e) { energies.push_back(e); };
  const auto res = solve_ground_state(geom, f, cfg);
  CHECK(res.converged);
  CHECK(res.pde_residual < 1e-5);
  CHECK(res.energy > 0.0);
  CHECK(std::abs(nehari_residual(res.field, geom, f)) <
        1e-8 * h1_norm_sq(res.field, geom));
  // Backtracking contract: accepted energies never increase.
  for (std::size_t k = 0; k + 1 < energies.size(); ++k)
    CHECK(energies[k + 1] <= energies[k] + 1e-12 * std::max(1.0, std::abs(energies[k])));
  // One-signed ground state.
  double mn = 0.0, mx = 0.0;
  for (double v : res.field.v) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  CHECK(mn * mx >= 0.0);
}

TEST_CASE("projected fields have positive action") {
  const auto geom = small_hyperbolic();
  const Nonlinearity f(0.2, 2.0, WeightSpec::phi_power(1.0), 3.0);
  for (unsigned seed : {21u, 22u, 23u, 24u, 25u}) {
    const auto [t, u] = nehari_project(random_field(geom, seed), geom, f);
    CHECK(action(u, geom, f) > 0.0);
  }
}

TEST_CASE("minimax: fiber maximum dominates the scan") {
  const auto geom = small_hyperbolic();
  const Nonlinearity f(0.0, 2.0, WeightSpec::phi_power(1.0), 3.0);
  const auto v = random_field(geom, 31u);
  std::vector<double> t_grid;
  for (int k = 1; k <= 200; ++k) t_grid.push_back(0.02 * k * 5.0);
  const auto mm = minimax_energy(v, geom, f, t_grid);
  CHECK(mm.scan_max <= mm.value + 1e-9 * std::max(1.0, std::abs(mm.value)));
}

TEST_CASE("pde_residual: eigenfunction oracle and linear growth in noise") {
  const ManifoldModel m(3, PsiProfile::euclidean());
  const auto geom = DiscreteGeometry::build(m, 1.0, 256, 16);
  const auto eig = lambda1_ball(m, 1.0, geom.nr());
  // f(r,s) = lambda1 s makes the eigenfunction an exact solution; discrete
  // schemes differ only by O(h^2).
  Nonlinearity f(eig.eigenvalue, 2.0, WeightSpec::constant(0.0), 3.0);
  AxisymmetricField u = geom.make_field();
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j) u.at(i, j) = eig.eigenfunction.v[i];
  const double r0 = pde_residual(u, geom, f);
  CHECK(r0 < 5e-3);

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  AxisymmetricField noise = geom.make_field();
  for (double& x : noise.v) x = dist(rng);
  noise.symmetrize_pole();
  for (int j = 0; j <= geom.ns(); ++j) noise.at(geom.nr(), j) = 0.0;
  auto perturbed = [&](double eps) {
    AxisymmetricField w = u;
    for (std::size_t k = 0; k < w.v.size(); ++k) w.v[k] += eps * noise.v[k];
    return pde_residual(w, geom, f);
  };
  const double r1 = perturbed(1e-3), r2 = perturbed(2e-3);
  CHECK(r2 / r1 == doctest::Approx(2.0).epsilon(0.25));
  CHECK(r1 > r0);
}

TEST_CASE("nonexistence probe rejects lambda below lambda1") {
  const auto geom = small_hyperbolic();
  const Nonlinearity f(0.0, 2.0, WeightSpec::constant(1.0), 3.0);
  SolverConfig cfg;
  CHECK_THROWS_AS(nonexistence_probe(geom, f, cfg), std::invalid_argument);
}
