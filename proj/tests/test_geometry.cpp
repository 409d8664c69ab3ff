#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <vector>

#include "nehari/geometry.hpp"

using namespace nehari;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("unit sphere areas from the Gamma formula") {
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * pi).epsilon(1e-14));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * pi).epsilon(1e-14));
  CHECK(unit_sphere_area(4) == doctest::Approx(2.0 * pi * pi).epsilon(1e-14));
}

TEST_CASE("dimension below 2 is rejected") {
  CHECK_THROWS_AS(ManifoldModel(1, PsiProfile::euclidean()), std::invalid_argument);
}

TEST_CASE("hyperbolic scalar curvature is constant -n(n-1)a^2") {
  for (int n : {2, 3, 4})
    for (double a : {0.5, 1.0}) {
      const ManifoldModel m(n, PsiProfile::hyperbolic(a));
      const double expect = -n * (n - 1.0) * a * a;
      for (double r = 0.1; r <= 10.0; r += 0.37)
        CHECK(scalar_curvature(m, r) == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("euclidean scalar curvature vanishes") {
  const ManifoldModel m(3, PsiProfile::euclidean());
  for (double r : {0.2, 1.0, 6.0}) CHECK(std::abs(scalar_curvature(m, r)) < 1e-12);
}

TEST_CASE("blended e^r profile curvature matches the defining formula at r=10") {
  // With psi = e^r beyond the blend window: psi''/psi = 1, ((psi')^2-1)/psi^2 =
  // 1 - e^{-2r}, so K = -2(n-1) - (n-1)(n-2)(1 - e^{-2r}); for n=3, K(10) ~ -6.
  const ManifoldModel m(3, PsiProfile::blended(GrowthLaw::ExpLinear, 1.0, 0.0, 1.0));
  CHECK(scalar_curvature(m, 10.0) == doctest::Approx(-6.0).epsilon(1e-8));
}

TEST_CASE("scalar curvature rejects r <= 0") {
  const ManifoldModel m(3, PsiProfile::euclidean());
  CHECK_THROWS_AS(scalar_curvature(m, 0.0), std::domain_error);
  CHECK_THROWS_AS(scalar_curvature(m, -1.0), std::domain_error);
}

TEST_CASE("curvature bounds: hyperbolic quotients are both 1") {
  const ManifoldModel m(3, PsiProfile::hyperbolic(1.0));
  std::vector<double> grid;
  for (double r = 0.5; r <= 20.0; r += 0.5) grid.push_back(r);
  const auto rep = curvature_bounds_report(m, grid);
  CHECK(rep.all_passed());
  for (const auto& item : rep.items)
    if (item.name.find("sup") != std::string::npos)
      CHECK(item.measured == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("curvature bounds: euclidean passes at equality") {
  const ManifoldModel m(3, PsiProfile::euclidean());
  const auto rep = curvature_bounds_report(m, {0.5, 1.0, 5.0});
  CHECK(rep.all_passed());
}

TEST_CASE("curvature bounds: e^{r^2}-type growth breaks the Ricci cap") {
  const ManifoldModel m(3, PsiProfile::blended(GrowthLaw::ExpPower, 2.0, 0.0, 1.0));
  std::vector<double> grid;
  for (double r = 1.0; r <= 30.0; r += 1.0) grid.push_back(r);
  const auto rep = curvature_bounds_report(m, grid, /*ricci_cap=*/1e3);
  CHECK_FALSE(rep.all_passed());
}

TEST_CASE("sphere area and ball volume: closed-form oracles") {
  const ManifoldModel eu(3, PsiProfile::euclidean());
  auto [S, V] = sphere_area_ball_volume(eu, 1.0);
  CHECK(S == doctest::Approx(4.0 * pi).epsilon(1e-10));
  CHECK(V == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-8));

  const ManifoldModel hy(3, PsiProfile::hyperbolic(1.0));
  auto [Sh, Vh] = sphere_area_ball_volume(hy, 1.0);
  CHECK(Sh == doctest::Approx(4.0 * pi * std::sinh(1.0) * std::sinh(1.0)).epsilon(1e-10));
  CHECK(Vh == doctest::Approx(4.0 * pi * (std::sinh(2.0) / 4.0 - 0.5)).epsilon(1e-8));
}

TEST_CASE("S and V are strictly increasing in r") {
  for (const auto& pr : {PsiProfile::euclidean(), PsiProfile::hyperbolic(1.0),
                         PsiProfile::blended(GrowthLaw::ExpLinear, 1.0, 0.0, 1.0)}) {
    const ManifoldModel m(3, pr);
    double Sp = 0.0, Vp = 0.0;
    for (double r = 0.5; r <= 8.0; r += 0.5) {
      auto [S, V] = sphere_area_ball_volume(m, r, 2000);
      CHECK(S > Sp);
      CHECK(V > Vp);
      Sp = S;
      Vp = V;
    }
  }
}
