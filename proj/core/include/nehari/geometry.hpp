#pragma once

#include <utility>
#include <vector>

#include "nehari/profile.hpp"
#include "nehari/report.hpp"

namespace nehari {

/// Rotationally symmetric manifold: a dimension and a warping function.
struct ManifoldModel {
  int n = 3;
  PsiProfile profile = PsiProfile::euclidean();

  ManifoldModel(int dim, PsiProfile p);
};

/// Area of the unit sphere S^{m-1} in R^m (cached per dimension).
double unit_sphere_area(int m);

/// Pole conditions psi(0)=0, psi'(0)=1, psi''(0)=0 and positivity on a sample grid.
ConditionReport check_pole_conditions(const PsiProfile& profile, double tol);

/// K(r) = -2(n-1) psi''/psi - (n-1)(n-2) ((psi')^2 - 1)/psi^2, r > 0.
double scalar_curvature(const ManifoldModel& model, double r);

/// Sectional-sign and Ricci-boundedness quotients ((psi')^2-1)/psi^2 and psi''/psi
/// over a grid: reports their suprema, nonnegativity, and an empirical upper bound.
ConditionReport curvature_bounds_report(const ManifoldModel& model,
                                        const std::vector<double>& r_grid,
                                        double ricci_cap = 1e6);

/// S(r) and V(r): geodesic sphere area and ball volume (composite Simpson).
std::pair<double, double> sphere_area_ball_volume(const ManifoldModel& model, double r,
                                                  int quad_nodes = 10000);

}  // namespace nehari
