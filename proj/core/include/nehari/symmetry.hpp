#pragma once

#include "nehari/discretization.hpp"
#include "nehari/nonlinearity.hpp"
#include "nehari/report.hpp"

namespace nehari {

enum class FieldSign { Positive, Negative, Mixed };

struct SymmetryReport {
  FieldSign sign = FieldSign::Mixed;
  bool is_radial = false;
  bool is_sigma_monotone = false;  // in the sign-aligned direction
  bool monotone_decreasing = true; // direction actually tested
  bool is_foliated_schwarz = false;  // u == polarize(u) node-exactly
  bool axis_flipped = false;         // sigma -> pi - sigma pre-pass applied
  double polarization_energy_gap = 0.0;
  double product_form_residual = 0.0;
  double max_sigma_variation = 0.0;
};

/// Two-point rearrangement sigma -> pi - sigma: max on the north hemisphere,
/// min on the south, equator row fixed. Needs Ns even (enforced at build).
AxisymmetricField polarize(const AxisymmetricField& u, const DiscreteGeometry& geom);

/// Gaps |D(u_H)-D(u)|, |int F(u_H)-int F(u)|, |int f(u_H)u_H - int f(u)u|.
/// The two value-integral identities are node-exact rearrangements; the gradient
/// gap vanishes only at first order in the angular step.
ConditionReport polarization_invariance_check(const AxisymmetricField& u,
                                              const DiscreteGeometry& geom,
                                              const Nonlinearity& f);

SymmetryReport foliated_schwarz_check(const AxisymmetricField& u, const DiscreteGeometry& geom,
                                      double tol);

/// Relative best rank-one approximation error of the value matrix under the
/// quadrature-weighted Frobenius norm (alternating least squares). Zero means
/// u is exactly separable as R(r) h(sigma).
double product_form_residual(const AxisymmetricField& u, const DiscreteGeometry& geom,
                             double tol = 1e-10, int max_iters = 500);

}  // namespace nehari
