#pragma once

#include <vector>

#include "nehari/discretization.hpp"
#include "nehari/geometry.hpp"

namespace nehari {

struct EigenResult {
  double eigenvalue = 0.0;
  RadialField eigenfunction;  // positive, L^2-normalized, on nodes r_i = i R/Nr
  int iterations = 0;
  double residual = 0.0;
};

/// Smallest Dirichlet eigenvalue of -psi^{1-n}(psi^{n-1} u')' on (0,R) with
/// u'(0)=0, u(R)=0, by inverse power iteration on the symmetrized tridiagonal
/// finite-volume discretization.
EigenResult lambda1_ball(const ManifoldModel& model, double R, int Nr, int max_iters = 200,
                         double tol = 1e-13);

struct SpectrumSequence {
  std::vector<double> radii;
  std::vector<double> values;
  double limit = 0.0;
  bool converged = false;
};

/// Plateau of lambda1(B_R) along an increasing schedule of radii; approximates
/// the bottom of the L^2 spectrum of the manifold.
SpectrumSequence lambda1_manifold(const ManifoldModel& model,
                                  const std::vector<double>& R_schedule, double tol,
                                  int Nr = 2000);

}  // namespace nehari
