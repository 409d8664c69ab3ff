#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "nehari/spectral.hpp"

using namespace nehari;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("euclidean ball eigenvalue matches (pi/R)^2") {
  const ManifoldModel m(3, PsiProfile::euclidean());
  for (double R : {1.0, 2.0, 5.0}) {
    const auto res = lambda1_ball(m, R, 2000);
    CHECK(res.eigenvalue == doctest::Approx(pi * pi / (R * R)).epsilon(0.01));
  }
}

TEST_CASE("doubling the radius divides the eigenvalue by four") {
  const ManifoldModel m(3, PsiProfile::euclidean());
  const double l1 = lambda1_ball(m, 1.5, 1500).eigenvalue;
  const double l2 = lambda1_ball(m, 3.0, 1500).eigenvalue;
  CHECK(l1 / l2 == doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("eigenfunction is strictly positive with unit L2 norm") {
  const ManifoldModel m(3, PsiProfile::hyperbolic(1.0));
  const auto res = lambda1_ball(m, 3.0, 800);
  const auto& u = res.eigenfunction.v;
  REQUIRE(u.size() == 801);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) CHECK(u[i] > 0.0);
  CHECK(u.back() == 0.0);
  CHECK(res.residual < 1e-10);
  CHECK(res.eigenvalue > 0.0);
}

TEST_CASE("lambda1(B_R) is nonincreasing in R") {
  const ManifoldModel m(3, PsiProfile::hyperbolic(1.0));
  const auto seq = lambda1_manifold(m, {2.0, 4.0, 6.0, 8.0, 12.0}, 1e-9, 1000);
  for (std::size_t k = 0; k + 1 < seq.values.size(); ++k)
    CHECK(seq.values[k] >= seq.values[k + 1] - 1e-8);
}

TEST_CASE("hyperbolic plateau approaches (n-1)^2/4 = 1") {
  const ManifoldModel m(3, PsiProfile::hyperbolic(1.0));
  const auto seq = lambda1_manifold(m, {5.0, 10.0, 15.0, 20.0, 25.0}, 1e-3, 2000);
  CHECK(seq.limit == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("euclidean values decay toward zero") {
  const ManifoldModel m(3, PsiProfile::euclidean());
  const auto seq = lambda1_manifold(m, {2.0, 8.0, 32.0}, 1e-12, 1000);
  CHECK(seq.values.back() < 0.02);
  for (std::size_t k = 0; k < seq.radii.size(); ++k)
    CHECK(seq.values[k] ==
          doctest::Approx(pi * pi / (seq.radii[k] * seq.radii[k])).epsilon(0.01));
}

TEST_CASE("preconditions") {
  const ManifoldModel m(3, PsiProfile::euclidean());
  CHECK_THROWS_AS(lambda1_ball(m, 1.0, 32), std::invalid_argument);
  CHECK_THROWS_AS(lambda1_ball(m, 0.0, 128), std::invalid_argument);
}
