#include "nehari/curvature_ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nehari {

PsiProfile classify_constant_curvature(int n, double kappa) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  if (kappa > 0.0)
    throw std::domain_error(
        "positive constant scalar curvature is incompatible with the pole conditions "
        "(psi would be a sine profile vanishing at finite r)");
  if (kappa == 0.0) return PsiProfile::euclidean();
  return PsiProfile::hyperbolic(std::sqrt(std::abs(kappa) / (n * (n - 1.0))));
}

OdeRun integrate_profile_ode(int n, double kappa, double r_max, double h, double eps) {
  if (n < 3) throw std::invalid_argument("profile ODE integration needs n >= 3");
  if (kappa > 0.0)
    throw std::domain_error("kappa > 0 rejected: incompatible with the pole conditions");
  if (!(h > 0.0 && h <= 1e-3)) throw std::invalid_argument("step h must be in (0, 1e-3]");
  if (!(r_max > 0.0 && r_max <= 10.0)) throw std::invalid_argument("r_max must be in (0, 10]");

  OdeRun run;
  run.n = n;
  run.kappa = kappa;
  run.beta = kappa / (n - 1.0);
  run.h = h;
  run.comparison = classify_constant_curvature(n, kappa);

  const double beta = run.beta;
  auto accel = [&](double psi, double dpsi) {
    return -0.5 * ((n - 2.0) * (dpsi * dpsi - 1.0) / psi + beta * psi);
  };

  // Series seed: psi = r + c3 r^3 + c5 r^5 + O(r^7), the ODE divides by psi at
  // the pole. Matching orders r and r^3 of the equation gives the coefficients.
  const double c3 = -kappa / (6.0 * n * (n - 1.0));
  const double c5 = -(3.0 * (n - 2.0) * c3 * c3 + beta * c3) / (10.0 * (n + 2.0));
  double r = eps;
  double psi = eps + c3 * eps * eps * eps + c5 * std::pow(eps, 5);
  double dpsi = 1.0 + 3.0 * c3 * eps * eps + 5.0 * c5 * std::pow(eps, 4);

  double max_dev = 0.0;
  auto record = [&]() {
    run.r.push_back(r);
    run.psi.push_back(psi);
    run.dpsi.push_back(dpsi);
    const double ref = run.comparison.psi(r);
    if (ref > 0.0) max_dev = std::max(max_dev, std::abs(psi - ref) / ref);
  };
  record();

  auto rk4 = [&](double step) {
    const double k1p = dpsi, k1v = accel(psi, dpsi);
    const double k2p = dpsi + 0.5 * step * k1v,
                 k2v = accel(psi + 0.5 * step * k1p, dpsi + 0.5 * step * k1v);
    const double k3p = dpsi + 0.5 * step * k2v,
                 k3v = accel(psi + 0.5 * step * k2p, dpsi + 0.5 * step * k2v);
    const double k4p = dpsi + step * k3v,
                 k4v = accel(psi + step * k3p, dpsi + step * k3v);
    psi += step / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    dpsi += step / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    r += step;
    if (!(psi > 0.0)) {
      std::ostringstream os;
      os << "psi reached zero at r = " << r << " during integration";
      throw std::runtime_error(os.str());
    }
  };

  while (r < r_max - 0.5 * h) {
    const double step = std::min(h, r_max - r);
    // The right-hand side has a 1/psi ~ 1/r factor, so derivatives blow up near
    // the pole; subdivide the step there to keep the local error ~ (r/20)^5 / r^4.
    const int m = std::clamp(static_cast<int>(std::ceil(step / (0.05 * r))), 1, 4096);
    for (int k = 0; k < m; ++k) rk4(step / m);
    record();
  }
  run.max_rel_deviation = max_dev;
  return run;
}

double OdeRun::sample(double radius) const {
  if (r.size() < 2 || radius < r.front() || radius > r.back())
    throw std::invalid_argument("sample radius outside the integrated range");
  const auto it = std::upper_bound(r.begin(), r.end(), radius);
  const std::size_t j = std::min(r.size() - 2, static_cast<std::size_t>(
                                                   std::max<std::ptrdiff_t>(0, it - r.begin() - 1)));
  const double dr = r[j + 1] - r[j];
  const double t = (radius - r[j]) / dr;
  const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t), h10 = t * (1.0 - t) * (1.0 - t),
               h01 = t * t * (3.0 - 2.0 * t), h11 = t * t * (t - 1.0);
  return h00 * psi[j] + h10 * dr * dpsi[j] + h01 * psi[j + 1] + h11 * dr * dpsi[j + 1];
}

}  // namespace nehari
