#include "nehari/spectral.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nehari {

namespace {

// Thomas solve for a symmetric tridiagonal SPD system.
void tridiag_solve(const std::vector<double>& diag, const std::vector<double>& off,
                   std::vector<double>& rhs) {
  const std::size_t m = diag.size();
  std::vector<double> c(m), d(m);
  c[0] = off.empty() ? 0.0 : off[0] / diag[0];
  d[0] = rhs[0] / diag[0];
  for (std::size_t i = 1; i < m; ++i) {
    const double denom = diag[i] - off[i - 1] * c[i - 1];
    c[i] = (i < m - 1) ? off[i] / denom : 0.0;
    d[i] = (rhs[i] - off[i - 1] * d[i - 1]) / denom;
  }
  rhs[m - 1] = d[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) rhs[i] = d[i] - c[i] * rhs[i + 1];
}

}  // namespace

EigenResult lambda1_ball(const ManifoldModel& model, double R, int Nr, int max_iters,
                         double tol) {
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  if (Nr < 64) throw std::invalid_argument("Nr must be at least 64");
  const int n = model.n;
  const auto& pr = model.profile;
  const double dr = R / Nr;

  // Unknowns u_0..u_{Nr-1}; u_{Nr} = 0 (Dirichlet), u'(0)=0 (Neumann at the pole).
  const int m = Nr;
  std::vector<double> a(Nr);  // psi^{n-1} at half nodes, fluxes
  for (int i = 0; i < Nr; ++i) a[i] = std::pow(pr.psi((i + 0.5) * dr), n - 1);

  std::vector<double> mass(m);
  mass[0] = 0.5 * dr * std::pow(pr.psi(0.25 * dr), n - 1);
  for (int i = 1; i < m; ++i) mass[i] = dr * std::pow(pr.psi(i * dr), n - 1);

  // Symmetrized operator B = D^{-1/2} K D^{-1/2}.
  std::vector<double> diag(m), off(m - 1);
  for (int i = 0; i < m; ++i) {
    const double left = (i == 0) ? 0.0 : a[i - 1];
    diag[i] = (left + a[i]) / dr / mass[i];
  }
  for (int i = 0; i + 1 < m; ++i) off[i] = -a[i] / dr / std::sqrt(mass[i] * mass[i + 1]);

  std::vector<double> y(m, 1.0), By(m);
  auto apply = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (int i = 0; i < m; ++i) {
      double v = diag[i] * x[i];
      if (i > 0) v += off[i - 1] * x[i - 1];
      if (i + 1 < m) v += off[i] * x[i + 1];
      out[i] = v;
    }
  };
  auto norm = [&](const std::vector<double>& x) {
    long double s = 0.0L;
    for (double v : x) s += static_cast<long double>(v) * v;
    return std::sqrt(static_cast<double>(s));
  };

  double lambda = 0.0, lambda_prev = -1.0;
  int it = 0;
  for (; it < max_iters; ++it) {
    tridiag_solve(diag, off, y);
    const double nn = norm(y);
    for (double& v : y) v /= nn;
    apply(y, By);
    long double rq = 0.0L;
    for (int i = 0; i < m; ++i) rq += static_cast<long double>(y[i]) * By[i];
    lambda = static_cast<double>(rq);
    if (std::abs(lambda - lambda_prev) <= tol * std::abs(lambda)) break;
    lambda_prev = lambda;
  }
  double resid = 0.0;
  for (int i = 0; i < m; ++i) resid += (By[i] - lambda * y[i]) * (By[i] - lambda * y[i]);
  resid = std::sqrt(resid);
  if (it == max_iters) {
    std::ostringstream os;
    os << "inverse power iteration did not converge; residual " << resid;
    throw std::runtime_error(os.str());
  }

  EigenResult res;
  res.eigenvalue = lambda;
  res.iterations = it + 1;
  res.residual = resid;

  // Back to nodal values, positive, L^2(M)-normalized.
  RadialField u;
  u.v.assign(Nr + 1, 0.0);
  double sgn = 0.0;
  for (int i = 0; i < m; ++i) sgn += y[i];
  const double flip = (sgn < 0.0) ? -1.0 : 1.0;
  for (int i = 0; i < m; ++i) u.v[i] = flip * y[i] / std::sqrt(mass[i]);
  long double l2 = 0.0L;
  const double wn = unit_sphere_area(n);
  for (int i = 0; i < m; ++i) l2 += static_cast<long double>(wn) * mass[i] * u.v[i] * u.v[i];
  const double nrm = std::sqrt(static_cast<double>(l2));
  for (int i = 0; i <= Nr; ++i) u.v[i] /= nrm;
  res.eigenfunction = std::move(u);
  return res;
}

SpectrumSequence lambda1_manifold(const ManifoldModel& model,
                                  const std::vector<double>& R_schedule, double tol, int Nr) {
  if (R_schedule.empty()) throw std::invalid_argument("R schedule must be nonempty");
  for (std::size_t k = 1; k < R_schedule.size(); ++k)
    if (!(R_schedule[k] > R_schedule[k - 1]))
      throw std::invalid_argument("R schedule must be increasing");

  SpectrumSequence seq;
  double prev = 0.0;
  for (std::size_t k = 0; k < R_schedule.size(); ++k) {
    const double lam = lambda1_ball(model, R_schedule[k], Nr).eigenvalue;
    seq.radii.push_back(R_schedule[k]);
    seq.values.push_back(lam);
    if (k > 0 && std::abs(lam - prev) < tol) {
      seq.converged = true;
      seq.limit = lam;
      return seq;
    }
    prev = lam;
  }
  seq.limit = seq.values.back();
  return seq;
}

}  // namespace nehari
