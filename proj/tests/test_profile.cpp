#include <doctest.h>

#include <cmath>

#include "nehari/geometry.hpp"
#include "nehari/profile.hpp"

using namespace nehari;

namespace {

// Central-difference cross-check of the analytic derivatives.
void check_derivatives(const PsiProfile& pr, double r) {
  const double h = 1e-5;
  const double d1 = (pr.psi(r + h) - pr.psi(r - h)) / (2.0 * h);
  const double d2 = (pr.psi(r + h) - 2.0 * pr.psi(r) + pr.psi(r - h)) / (h * h);
  CHECK(pr.dpsi(r) == doctest::Approx(d1).epsilon(1e-7));
  CHECK(pr.ddpsi(r) == doctest::Approx(d2).epsilon(1e-4));
}

}  // namespace

TEST_CASE("euclidean profile is the identity") {
  const auto pr = PsiProfile::euclidean();
  CHECK(pr.psi(2.5) == 2.5);
  CHECK(pr.dpsi(2.5) == 1.0);
  CHECK(pr.ddpsi(2.5) == 0.0);
  CHECK(pr.phi(7.0) == 1.0);
  CHECK(pr.phi(0.0) == 1.0);
}

TEST_CASE("hyperbolic profile matches sinh(ar)/a") {
  const auto pr = PsiProfile::hyperbolic(0.7);
  for (double r : {0.1, 1.0, 3.0, 9.0}) {
    CHECK(pr.psi(r) == doctest::Approx(std::sinh(0.7 * r) / 0.7).epsilon(1e-14));
    check_derivatives(pr, r);
  }
}

TEST_CASE("pole conditions hold for all shipped profiles") {
  for (const auto& pr :
       {PsiProfile::euclidean(), PsiProfile::hyperbolic(1.0), PsiProfile::hyperbolic(0.3),
        PsiProfile::blended(GrowthLaw::ExpLinear, 1.0, 0.0, 1.0),
        PsiProfile::blended(GrowthLaw::PolyExp, 1.0, 2.0, 1.0),
        PsiProfile::blended(GrowthLaw::ExpPower, 1.5, 0.0, 1.0),
        PsiProfile::blended(GrowthLaw::PolyExpPower, 1.5, 1.0, 1.0)}) {
    const auto rep = check_pole_conditions(pr, 1e-10);
    CHECK(rep.all_passed());
  }
}

TEST_CASE("blended profile equals sinh before the window and the target after") {
  const auto pr = PsiProfile::blended(GrowthLaw::ExpLinear, 1.0, 0.0, 1.0);
  CHECK(pr.psi(0.5) == doctest::Approx(std::sinh(0.5)).epsilon(1e-14));
  CHECK(pr.psi(5.0) == doctest::Approx(std::exp(5.0)).epsilon(1e-12));
  // Inside the window the blend is C^2; spot-check the derivative chain rules.
  for (double r : {1.1, 1.5, 1.9, 2.5}) check_derivatives(pr, r);
}

TEST_CASE("blended growth laws reach their targets") {
  CHECK(PsiProfile::blended(GrowthLaw::ExpPower, 1.5, 0.0, 1.0).psi(4.0) ==
        doctest::Approx(std::exp(std::pow(4.0, 1.5))).epsilon(1e-10));
  CHECK(PsiProfile::blended(GrowthLaw::PolyExp, 1.0, 2.0, 1.0).psi(4.0) ==
        doctest::Approx(16.0 * std::exp(4.0)).epsilon(1e-10));
  CHECK(PsiProfile::blended(GrowthLaw::PolyExpPower, 1.2, 1.0, 1.0).psi(4.0) ==
        doctest::Approx(4.0 * std::exp(std::pow(4.0, 1.2))).epsilon(1e-10));
}

TEST_CASE("phi stays >= 1 on hyperbolic and blended profiles") {
  for (const auto& pr : {PsiProfile::hyperbolic(1.0),
                         PsiProfile::blended(GrowthLaw::ExpLinear, 1.0, 0.0, 1.0)}) {
    for (double r = 0.01; r < 30.0; r *= 1.5) CHECK(pr.phi(r) >= 1.0 - 1e-12);
  }
}

TEST_CASE("describe names the profile") {
  CHECK(PsiProfile::euclidean().describe() == "euclidean");
  CHECK(PsiProfile::hyperbolic(1.0).describe().find("hyperbolic") == 0);
}
