#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nehari/geometry.hpp"

namespace nehari {

/// Values on the (r,sigma) tensor grid, row-major with sigma fastest.
struct AxisymmetricField {
  int nr = 0, ns = 0;  // node counts are (nr+1) x (ns+1)
  std::vector<double> v;

  AxisymmetricField() = default;
  AxisymmetricField(int nr_, int ns_) : nr(nr_), ns(ns_), v((nr_ + 1) * (ns_ + 1), 0.0) {}

  double& at(int i, int j) { return v[i * (ns + 1) + j]; }
  double at(int i, int j) const { return v[i * (ns + 1) + j]; }

  /// r=0 is a single geometric point; forces the pole row to its mean.
  void symmetrize_pole();
};

struct RadialField {
  std::vector<double> v;  // one value per r-node
};

/// Uniform tensor grid on [0,R_max] x [0,pi] with trapezoid quadrature weights
/// carrying the Riemannian volume element, plus the staggered edge weights used
/// by the discrete Dirichlet form.
class DiscreteGeometry {
 public:
  static DiscreteGeometry build(const ManifoldModel& model, double R_max, int Nr, int Ns);

  const ManifoldModel& model() const { return model_; }
  double r_max() const { return R_max_; }
  int nr() const { return Nr_; }
  int ns() const { return Ns_; }
  double dr() const { return dr_; }
  double ds() const { return ds_; }
  double r(int i) const { return i * dr_; }
  double sigma(int j) const { return j * ds_; }

  double node_weight(int i, int j) const { return w_[i * (Ns_ + 1) + j]; }
  /// Edge weight of the r-derivative term between nodes (i,j) and (i+1,j).
  double r_edge_weight(int i, int j) const { return er_[i * (Ns_ + 1) + j]; }
  /// Edge weight of the sigma-derivative term between nodes (i,j) and (i,j+1).
  double s_edge_weight(int i, int j) const { return es_[i * Ns_ + j]; }

  /// Sum of all node weights; equals V(R_max) up to quadrature error.
  double volume_sum() const { return volume_sum_; }
  /// Relative defect of volume_sum against the quadrature ball volume.
  double volume_defect() const { return volume_defect_; }

  AxisymmetricField make_field() const { return AxisymmetricField(Nr_, Ns_); }

 private:
  ManifoldModel model_{3, PsiProfile::euclidean()};
  double R_max_ = 1.0, dr_ = 0.0, ds_ = 0.0;
  int Nr_ = 0, Ns_ = 0;
  std::vector<double> w_, er_, es_;
  double volume_sum_ = 0.0, volume_defect_ = 0.0;
};

/// Quadrature of a sampled field against the Riemannian volume element.
double integrate(const AxisymmetricField& g, const DiscreteGeometry& geom);
/// Quadrature of a pointwise function (r,sigma) -> value.
double integrate(const std::function<double(double, double)>& g, const DiscreteGeometry& geom);
/// Quadrature of a pointwise transform of field values, sum w_ij G(u_ij, r_i).
double integrate_pointwise(const AxisymmetricField& u, const DiscreteGeometry& geom,
                           const std::function<double(double r, double s)>& G);

/// Discrete int |grad_g u|^2 dV_g via the staggered edge form.
double dirichlet_energy(const AxisymmetricField& u, const DiscreteGeometry& geom);

/// A u with u^T A u = dirichlet_energy(u); gradient of the energy is 2 A u.
AxisymmetricField stiffness_apply(const AxisymmetricField& u, const DiscreteGeometry& geom);

/// (||u||_{L^q(M)}, ||u||_{L^q(R^n; phi^{n-1})}) computed through independent weights.
std::pair<double, double> weighted_euclidean_norms(const AxisymmetricField& u,
                                                   const DiscreteGeometry& geom, double q);

/// Squared W^{1,2}(R^n; phi^{n-1}, phi^{n-3}) norm of the same grid field.
double weighted_w12_norm_sq(const AxisymmetricField& u, const DiscreteGeometry& geom);
/// Squared H^1(M) norm: dirichlet_energy + int u^2.
double h1_norm_sq(const AxisymmetricField& u, const DiscreteGeometry& geom);

/// CSV with header r,sigma,u; values printed with 17 significant digits.
void write_field_csv(const AxisymmetricField& u, const DiscreteGeometry& geom,
                     const std::string& path);
AxisymmetricField read_field_csv(const std::string& path, int nr, int ns);

}  // namespace nehari
