#include "nehari/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nehari {

ManifoldModel::ManifoldModel(int dim, PsiProfile p) : n(dim), profile(std::move(p)) {
  if (n < 2) throw std::invalid_argument("model dimension must be >= 2");
}

double unit_sphere_area(int m) {
  if (m < 1) throw std::invalid_argument("sphere dimension must be >= 1");
  static std::map<int, double> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  const double v = 2.0 * std::pow(M_PI, 0.5 * m) / std::tgamma(0.5 * m);
  cache[m] = v;
  return v;
}

ConditionReport check_pole_conditions(const PsiProfile& profile, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  ConditionReport rep;

  const double p0 = profile.psi(0.0);
  rep.add("psi(0)=0", std::abs(p0) <= tol, std::abs(p0));

  const double d0 = profile.dpsi(0.0);
  rep.add("psi'(0)=1", std::abs(d0 - 1.0) <= tol, std::abs(d0 - 1.0));

  const double dd0 = profile.ddpsi(0.0);
  rep.add("psi''(0)=0", std::abs(dd0) <= tol, std::abs(dd0));

  // Positivity sweep over several decades of r.
  double worst = 1.0;
  double worst_r = 0.0;
  bool positive = true;
  for (double r = 1e-6; r <= 50.0; r *= 1.3) {
    const double v = profile.psi(r);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "psi evaluation not finite at r=" << r;
      throw std::runtime_error(os.str());
    }
    if (v <= 0.0) {
      positive = false;
      if (v < worst) {
        worst = v;
        worst_r = r;
      }
    }
  }
  std::ostringstream os;
  if (!positive) os << "psi <= 0 near r=" << worst_r;
  rep.add("psi>0 on (0,inf)", positive, positive ? 0.0 : worst, os.str());
  return rep;
}

double scalar_curvature(const ManifoldModel& model, double r) {
  if (!(r > 0.0)) throw std::domain_error("scalar_curvature requires r > 0");
  const auto& pr = model.profile;
  const double psi = pr.psi(r);
  if (!(psi > 0.0)) throw std::domain_error("scalar_curvature requires psi(r) > 0");
  const double n = model.n;
  const double dpsi = pr.dpsi(r);
  const double ddpsi = pr.ddpsi(r);
  return -2.0 * (n - 1.0) * ddpsi / psi -
         (n - 1.0) * (n - 2.0) * (dpsi * dpsi - 1.0) / (psi * psi);
}

ConditionReport curvature_bounds_report(const ManifoldModel& model,
                                        const std::vector<double>& r_grid,
                                        double ricci_cap) {
  if (r_grid.empty()) throw std::invalid_argument("r_grid must be nonempty");
  const auto& pr = model.profile;

  double sup_sec = -std::numeric_limits<double>::infinity();
  double sup_rad = -std::numeric_limits<double>::infinity();
  double min_sec = std::numeric_limits<double>::infinity();
  double min_rad = std::numeric_limits<double>::infinity();
  for (double r : r_grid) {
    const double psi = pr.psi(r);
    const double dpsi = pr.dpsi(r);
    const double ddpsi = pr.ddpsi(r);
    const double qs = (dpsi * dpsi - 1.0) / (psi * psi);
    const double qr = ddpsi / psi;
    sup_sec = std::max(sup_sec, qs);
    sup_rad = std::max(sup_rad, qr);
    min_sec = std::min(min_sec, qs);
    min_rad = std::min(min_rad, qr);
  }

  ConditionReport rep;
  const double sign_tol = 1e-12;
  rep.add("sec_bound: ((psi')^2-1)/psi^2 >= 0", min_sec >= -sign_tol, min_sec);
  rep.add("sec_bound: psi''/psi >= 0", min_rad >= -sign_tol, min_rad);
  rep.add("ricci_bounded: sup ((psi')^2-1)/psi^2", sup_sec <= ricci_cap, sup_sec);
  rep.add("ricci_bounded: sup psi''/psi", sup_rad <= ricci_cap, sup_rad);
  return rep;
}

std::pair<double, double> sphere_area_ball_volume(const ManifoldModel& model, double r,
                                                  int quad_nodes) {
  if (!(r > 0.0)) throw std::domain_error("sphere_area_ball_volume requires r > 0");
  const double wn = unit_sphere_area(model.n);
  const auto& pr = model.profile;
  const int n = model.n;

  const double S = wn * std::pow(pr.psi(r), n - 1);

  // Composite Simpson for V(r) = w_n \int_0^r psi^{n-1}.
  int m = quad_nodes;
  if (m % 2 != 0) ++m;
  const double h = r / m;
  double acc = std::pow(pr.psi(0.0), n - 1) + std::pow(pr.psi(r), n - 1);
  for (int i = 1; i < m; ++i)
    acc += (i % 2 ? 4.0 : 2.0) * std::pow(pr.psi(i * h), n - 1);
  const double V = wn * acc * h / 3.0;
  return {S, V};
}

}  // namespace nehari
