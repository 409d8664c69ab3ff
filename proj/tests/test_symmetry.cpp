#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "nehari/symmetry.hpp"

using namespace nehari;

namespace {

DiscreteGeometry geom_h(int nr = 48, int ns = 16) {
  return DiscreteGeometry::build(ManifoldModel(3, PsiProfile::hyperbolic(1.0)), 4.0, nr, ns);
}

AxisymmetricField random_field(const DiscreteGeometry& geom, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  AxisymmetricField u = geom.make_field();
  for (double& v : u.v) v = dist(rng);
  u.symmetrize_pole();
  return u;
}

}  // namespace

TEST_CASE("polarize: idempotent, row-rearranging, fixed on monotone fields") {
  const auto geom = geom_h();
  for (unsigned seed = 0; seed < 30; ++seed) {
    const auto u = random_field(geom, seed);
    const auto uh = polarize(u, geom);
    CHECK(polarize(uh, geom).v == uh.v);  // idempotence, node-exact
    // Rearrangement: each r-row keeps its multiset of values.
    for (int i = 0; i <= geom.nr(); ++i) {
      std::vector<double> a, b;
      for (int j = 0; j <= geom.ns(); ++j) {
        a.push_back(u.at(i, j));
        b.push_back(uh.at(i, j));
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }

  // Radial fields and sigma-nonincreasing fields are fixed points.
  AxisymmetricField rad = geom.make_field();
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j) rad.at(i, j) = std::exp(-geom.r(i));
  CHECK(polarize(rad, geom).v == rad.v);

  AxisymmetricField mono = geom.make_field();
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j)
      mono.at(i, j) = std::exp(-geom.r(i)) * (2.0 + std::cos(geom.sigma(j)));
  CHECK(polarize(mono, geom).v == mono.v);

  // -cos(sigma) is flipped into the cos(sigma) arrangement.
  AxisymmetricField anti = geom.make_field();
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j) anti.at(i, j) = -std::cos(geom.sigma(j));
  const auto ah = polarize(anti, geom);
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j)
      CHECK(ah.at(i, j) == doctest::Approx(std::cos(geom.sigma(j))).epsilon(1e-14));
}

TEST_CASE("polarization preserves every pointwise integral node-exactly") {
  const auto geom = geom_h();
  const Nonlinearity f(0.3, 2.0, WeightSpec::phi_power(1.0), 3.0);
  for (unsigned seed = 0; seed < 20; ++seed) {
    const auto u = random_field(geom, seed);
    const auto rep = polarization_invariance_check(u, geom, f);
    CHECK(rep.all_passed());
    // Equimeasurability with an unrelated pointwise transform.
    const auto uh = polarize(u, geom);
    const double a =
        integrate_pointwise(u, geom, [](double, double s) { return s * s * s - 2.0 * s; });
    const double b =
        integrate_pointwise(uh, geom, [](double, double s) { return s * s * s - 2.0 * s; });
    CHECK(std::abs(a - b) <= 1e-12);
  }
}

TEST_CASE("gradient-energy gap decays at first order in the angular step") {
  auto gap_at = [](int ns) {
    const auto geom = geom_h(48, ns);
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    // Smooth nonsymmetric field: random low-frequency angular modes.
    const double a1 = dist(rng), a2 = dist(rng), a3 = dist(rng);
    AxisymmetricField u = geom.make_field();
    for (int i = 0; i <= geom.nr(); ++i)
      for (int j = 0; j <= geom.ns(); ++j) {
        const double s = geom.sigma(j);
        u.at(i, j) = std::exp(-geom.r(i)) *
                     (a1 * std::cos(s) + a2 * std::cos(2.0 * s) + a3 * std::sin(3.0 * s));
      }
    u.symmetrize_pole();
    const auto uh = polarize(u, geom);
    return std::abs(dirichlet_energy(uh, geom) - dirichlet_energy(u, geom));
  };
  const double g1 = gap_at(16), g2 = gap_at(32), g3 = gap_at(64);
  CHECK(g2 <= 0.8 * g1);
  CHECK(g3 <= 0.8 * g2);
}

TEST_CASE("foliated Schwarz diagnostics") {
  const auto geom = geom_h();

  SUBCASE("positive radial field") {
    AxisymmetricField u = geom.make_field();
    for (int i = 0; i <= geom.nr(); ++i)
      for (int j = 0; j <= geom.ns(); ++j) u.at(i, j) = std::exp(-geom.r(i));
    const auto rep = foliated_schwarz_check(u, geom, 1e-10);
    CHECK(rep.sign == FieldSign::Positive);
    CHECK(rep.is_radial);
    CHECK(rep.is_sigma_monotone);  // is_radial implies monotone
    CHECK(rep.is_foliated_schwarz);
    CHECK(rep.product_form_residual < 1e-9);
  }

  SUBCASE("positive tilted field is nonradial but decreasing") {
    AxisymmetricField u = geom.make_field();
    for (int i = 0; i <= geom.nr(); ++i)
      for (int j = 0; j <= geom.ns(); ++j)
        u.at(i, j) = std::exp(-geom.r(i)) * (1.0 + 0.5 * std::cos(geom.sigma(j)));
    u.symmetrize_pole();
    const auto rep = foliated_schwarz_check(u, geom, 1e-10);
    CHECK(rep.sign == FieldSign::Positive);
    CHECK_FALSE(rep.is_radial);
    CHECK(rep.is_sigma_monotone);
    CHECK(rep.monotone_decreasing);
    CHECK(rep.is_foliated_schwarz);
  }

  SUBCASE("negative solutions align the lobe the other way") {
    AxisymmetricField u = geom.make_field();
    for (int i = 0; i <= geom.nr(); ++i)
      for (int j = 0; j <= geom.ns(); ++j)
        u.at(i, j) = -std::exp(-geom.r(i)) * (1.0 + 0.5 * std::cos(geom.sigma(j)));
    u.symmetrize_pole();
    const auto rep = foliated_schwarz_check(u, geom, 1e-10);
    CHECK(rep.sign == FieldSign::Negative);
    CHECK_FALSE(rep.monotone_decreasing);
    CHECK(rep.is_sigma_monotone);
  }

  SUBCASE("south-lobe fields are analyzed after an axis flip") {
    AxisymmetricField u = geom.make_field();
    for (int i = 0; i <= geom.nr(); ++i)
      for (int j = 0; j <= geom.ns(); ++j)
        u.at(i, j) = std::exp(-geom.r(i)) * (1.0 - 0.5 * std::cos(geom.sigma(j)));
    u.symmetrize_pole();
    const auto rep = foliated_schwarz_check(u, geom, 1e-10);
    CHECK(rep.axis_flipped);
    CHECK(rep.is_sigma_monotone);
  }
}

TEST_CASE("product-form residual distinguishes separable from entangled fields") {
  const auto geom = geom_h();
  AxisymmetricField sep = geom.make_field();
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j)
      sep.at(i, j) = std::exp(-geom.r(i)) * (1.0 + 0.3 * std::cos(geom.sigma(j)));
  CHECK(product_form_residual(sep, geom) < 1e-9);

  AxisymmetricField mix = geom.make_field();
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j)
      mix.at(i, j) = std::exp(-geom.r(i)) +
                     std::exp(-2.0 * (geom.r(i) - 2.0) * (geom.r(i) - 2.0)) *
                         std::cos(geom.sigma(j));
  mix.symmetrize_pole();
  CHECK(product_form_residual(mix, geom) > 0.01);

  CHECK_THROWS_AS(product_form_residual(geom.make_field(), geom), std::domain_error);
}
