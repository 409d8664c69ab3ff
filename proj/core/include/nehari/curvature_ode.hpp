#pragma once

#include <vector>

#include "nehari/profile.hpp"

namespace nehari {

/// Sampled integration of the constant-scalar-curvature profile equation
/// 2 psi'' + (n-2)((psi')^2 - 1)/psi + beta psi = 0, beta = kappa/(n-1).
struct OdeRun {
  int n = 3;
  double kappa = 0.0;
  double beta = 0.0;
  double h = 1e-3;
  std::vector<double> r, psi, dpsi;
  PsiProfile comparison = PsiProfile::euclidean();
  double max_rel_deviation = 0.0;  // against the closed-form classification profile

  /// Cubic Hermite interpolation of psi at an arbitrary radius in [r.front(), r.back()].
  double sample(double radius) const;
};

/// Classical RK4 from a series seed at r = eps; kappa must be <= 0 (positive
/// constant curvature contradicts the pole conditions).
OdeRun integrate_profile_ode(int n, double kappa, double r_max, double h, double eps = 1e-4);

/// kappa < 0 -> hyperbolic(sqrt(|kappa|/(n(n-1)))), kappa = 0 -> euclidean.
PsiProfile classify_constant_curvature(int n, double kappa);

}  // namespace nehari
