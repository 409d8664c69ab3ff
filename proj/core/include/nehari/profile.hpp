#pragma once

#include <string>

namespace nehari {

enum class ProfileKind { Euclidean, Hyperbolic, Blended };

/// Asymptotic growth law a blended profile matches far from the pole.
enum class GrowthLaw {
  ExpLinear,    // e^{a r}
  ExpPower,     // e^{r^a}
  PolyExp,      // r^b e^{a r}
  PolyExpPower  // r^b e^{r^a}
};

/// Warping function of the rotationally symmetric metric dr^2 + psi(r)^2 dTheta^2.
///
/// Shipped profiles:
///   euclidean      psi(r) = r
///   hyperbolic(a)  psi(r) = sinh(a r)/a
///   blended        psi = sinh on [0,r0], target growth law on [2 r0, inf),
///                  quintic-Hermite C^2 blend in between.
///
/// All derivatives are analytic; no numerical differentiation anywhere.
class PsiProfile {
 public:
  static PsiProfile euclidean();
  static PsiProfile hyperbolic(double alpha);
  static PsiProfile blended(GrowthLaw law, double a, double b, double r0);

  double psi(double r) const;
  double dpsi(double r) const;
  double ddpsi(double r) const;

  /// phi(r) = psi(r)/r, extended by its limit 1 at the pole.
  double phi(double r) const;

  ProfileKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::string describe() const;

 private:
  PsiProfile() = default;

  double target(double r) const;
  double dtarget(double r) const;
  double ddtarget(double r) const;

  ProfileKind kind_ = ProfileKind::Euclidean;
  double alpha_ = 1.0;          // hyperbolic
  GrowthLaw law_ = GrowthLaw::ExpLinear;
  double a_ = 1.0, b_ = 1.0;    // blended target parameters
  double r0_ = 1.0;             // blend window is [r0, 2 r0]
};

}  // namespace nehari
