#include "nehari/discretization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nehari {

void AxisymmetricField::symmetrize_pole() {
  long double acc = 0.0L;
  for (int j = 0; j <= ns; ++j) acc += at(0, j);
  const double mean = static_cast<double>(acc / (ns + 1));
  for (int j = 0; j <= ns; ++j) at(0, j) = mean;
}

DiscreteGeometry DiscreteGeometry::build(const ManifoldModel& model, double R_max, int Nr,
                                         int Ns) {
  if (!(R_max > 0.0)) throw std::invalid_argument("R_max must be positive");
  if (Nr < 16) throw std::invalid_argument("Nr must be at least 16");
  if (Ns < 8) throw std::invalid_argument("Ns must be at least 8");
  if (Ns % 2 != 0) throw std::invalid_argument("Ns must be even (node-exact reflection)");

  DiscreteGeometry g;
  g.model_ = model;
  g.R_max_ = R_max;
  g.Nr_ = Nr;
  g.Ns_ = Ns;
  g.dr_ = R_max / Nr;
  g.ds_ = M_PI / Ns;

  const int n = model.n;
  const double cn = unit_sphere_area(n - 1);  // |S^{n-2}|
  const auto& pr = model.profile;

  auto tau = [](int k, int N) { return (k == 0 || k == N) ? 0.5 : 1.0; };

  std::vector<double> psi_n1(Nr + 1), psi_n3(Nr + 1), sin_n2(Ns + 1);
  for (int i = 0; i <= Nr; ++i) {
    const double psi = pr.psi(i * g.dr_);
    psi_n1[i] = std::pow(psi, n - 1);
    psi_n3[i] = (i == 0) ? 0.0 : std::pow(psi, n - 3);
  }
  for (int j = 0; j <= Ns; ++j) sin_n2[j] = std::pow(std::sin(j * g.ds_), n - 2);

  g.w_.assign((Nr + 1) * (Ns + 1), 0.0);
  long double vol = 0.0L;
  for (int i = 0; i <= Nr; ++i)
    for (int j = 0; j <= Ns; ++j) {
      const double w =
          cn * psi_n1[i] * sin_n2[j] * g.dr_ * g.ds_ * tau(i, Nr) * tau(j, Ns);
      g.w_[i * (Ns + 1) + j] = w;
      vol += w;
    }
  g.volume_sum_ = static_cast<double>(vol);
  const double V = sphere_area_ball_volume(model, R_max).second;
  g.volume_defect_ = std::abs(g.volume_sum_ - V) / V;

  // r-edge weights (midpoint psi, trapezoid in sigma), the u_r^2 part of the form.
  g.er_.assign(Nr * (Ns + 1), 0.0);
  for (int i = 0; i < Nr; ++i) {
    const double psim = std::pow(pr.psi((i + 0.5) * g.dr_), n - 1);
    for (int j = 0; j <= Ns; ++j)
      g.er_[i * (Ns + 1) + j] = cn * psim * sin_n2[j] * g.dr_ * g.ds_ * tau(j, Ns);
  }

  // sigma-edge weights (node psi^{n-3}, midpoint sin), the psi^{-2} u_sigma^2 part.
  // Edges at i=0 are dropped: the pole is a single point.
  g.es_.assign((Nr + 1) * Ns, 0.0);
  for (int i = 1; i <= Nr; ++i)
    for (int j = 0; j < Ns; ++j) {
      const double sinm = std::pow(std::sin((j + 0.5) * g.ds_), n - 2);
      g.es_[i * Ns + j] = cn * psi_n3[i] * sinm * g.dr_ * g.ds_ * tau(i, Nr);
    }
  return g;
}

double integrate(const AxisymmetricField& g, const DiscreteGeometry& geom) {
  if (g.nr != geom.nr() || g.ns != geom.ns())
    throw std::invalid_argument("field shape does not match geometry");
  long double acc = 0.0L;
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j)
      acc += static_cast<long double>(geom.node_weight(i, j)) * g.at(i, j);
  return static_cast<double>(acc);
}

double integrate(const std::function<double(double, double)>& g, const DiscreteGeometry& geom) {
  long double acc = 0.0L;
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j)
      acc += static_cast<long double>(geom.node_weight(i, j)) * g(geom.r(i), geom.sigma(j));
  return static_cast<double>(acc);
}

double integrate_pointwise(const AxisymmetricField& u, const DiscreteGeometry& geom,
                           const std::function<double(double, double)>& G) {
  if (u.nr != geom.nr() || u.ns != geom.ns())
    throw std::invalid_argument("field shape does not match geometry");
  long double acc = 0.0L;
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j)
      acc += static_cast<long double>(geom.node_weight(i, j)) * G(geom.r(i), u.at(i, j));
  return static_cast<double>(acc);
}

double dirichlet_energy(const AxisymmetricField& u, const DiscreteGeometry& geom) {
  if (u.nr != geom.nr() || u.ns != geom.ns())
    throw std::invalid_argument("field shape does not match geometry");
  const double inv_dr2 = 1.0 / (geom.dr() * geom.dr());
  const double inv_ds2 = 1.0 / (geom.ds() * geom.ds());
  long double acc = 0.0L;
  for (int i = 0; i < geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j) {
      const double d = u.at(i + 1, j) - u.at(i, j);
      acc += static_cast<long double>(geom.r_edge_weight(i, j)) * d * d * inv_dr2;
    }
  for (int i = 1; i <= geom.nr(); ++i)
    for (int j = 0; j < geom.ns(); ++j) {
      const double d = u.at(i, j + 1) - u.at(i, j);
      acc += static_cast<long double>(geom.s_edge_weight(i, j)) * d * d * inv_ds2;
    }
  return static_cast<double>(acc);
}

AxisymmetricField stiffness_apply(const AxisymmetricField& u, const DiscreteGeometry& geom) {
  if (u.nr != geom.nr() || u.ns != geom.ns())
    throw std::invalid_argument("field shape does not match geometry");
  AxisymmetricField out = geom.make_field();
  const double inv_dr2 = 1.0 / (geom.dr() * geom.dr());
  const double inv_ds2 = 1.0 / (geom.ds() * geom.ds());
  for (int i = 0; i < geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j) {
      const double k = geom.r_edge_weight(i, j) * inv_dr2;
      const double d = u.at(i, j) - u.at(i + 1, j);
      out.at(i, j) += k * d;
      out.at(i + 1, j) -= k * d;
    }
  for (int i = 1; i <= geom.nr(); ++i)
    for (int j = 0; j < geom.ns(); ++j) {
      const double k = geom.s_edge_weight(i, j) * inv_ds2;
      const double d = u.at(i, j) - u.at(i, j + 1);
      out.at(i, j) += k * d;
      out.at(i, j + 1) -= k * d;
    }
  return out;
}

std::pair<double, double> weighted_euclidean_norms(const AxisymmetricField& u,
                                                   const DiscreteGeometry& geom, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1");
  const int n = geom.model().n;
  const double cn = unit_sphere_area(n - 1);
  const auto& pr = geom.model().profile;
  auto tau = [](int k, int N) { return (k == 0 || k == N) ? 0.5 : 1.0; };

  long double acc_m = 0.0L, acc_e = 0.0L;
  for (int i = 0; i <= geom.nr(); ++i) {
    const double r = geom.r(i);
    const double we_radial = std::pow(r, n - 1) * std::pow(pr.phi(r), n - 1);
    for (int j = 0; j <= geom.ns(); ++j) {
      const double a = std::pow(std::abs(u.at(i, j)), q);
      acc_m += static_cast<long double>(geom.node_weight(i, j)) * a;
      const double we = cn * we_radial * std::pow(std::sin(geom.sigma(j)), n - 2) *
                        geom.dr() * geom.ds() * tau(i, geom.nr()) * tau(j, geom.ns());
      acc_e += static_cast<long double>(we) * a;
    }
  }
  return {std::pow(static_cast<double>(acc_m), 1.0 / q),
          std::pow(static_cast<double>(acc_e), 1.0 / q)};
}

double weighted_w12_norm_sq(const AxisymmetricField& u, const DiscreteGeometry& geom) {
  const int n = geom.model().n;
  const double cn = unit_sphere_area(n - 1);
  const auto& pr = geom.model().profile;
  auto tau = [](int k, int N) { return (k == 0 || k == N) ? 0.5 : 1.0; };
  const double inv_dr2 = 1.0 / (geom.dr() * geom.dr());
  const double inv_ds2 = 1.0 / (geom.ds() * geom.ds());

  long double acc = 0.0L;
  // L^2(R^n; phi^{n-1}) part.
  for (int i = 0; i <= geom.nr(); ++i) {
    const double r = geom.r(i);
    const double wrad = std::pow(r, n - 1) * std::pow(pr.phi(r), n - 1);
    for (int j = 0; j <= geom.ns(); ++j) {
      const double we = cn * wrad * std::pow(std::sin(geom.sigma(j)), n - 2) * geom.dr() *
                        geom.ds() * tau(i, geom.nr()) * tau(j, geom.ns());
      acc += static_cast<long double>(we) * u.at(i, j) * u.at(i, j);
    }
  }
  // Gradient part with weight phi^{n-3}: r^{n-1} phi^{n-3} u_r^2 + r^{n-3} phi^{n-3} u_s^2.
  for (int i = 0; i < geom.nr(); ++i) {
    const double rm = (i + 0.5) * geom.dr();
    const double wrad = std::pow(rm, n - 1) * std::pow(pr.phi(rm), n - 3);
    for (int j = 0; j <= geom.ns(); ++j) {
      const double we = cn * wrad * std::pow(std::sin(geom.sigma(j)), n - 2) * geom.dr() *
                        geom.ds() * tau(j, geom.ns());
      const double d = u.at(i + 1, j) - u.at(i, j);
      acc += static_cast<long double>(we) * d * d * inv_dr2;
    }
  }
  for (int i = 1; i <= geom.nr(); ++i) {
    const double r = geom.r(i);
    const double wrad = std::pow(r, n - 3) * std::pow(pr.phi(r), n - 3);
    for (int j = 0; j < geom.ns(); ++j) {
      const double we = cn * wrad * std::pow(std::sin((j + 0.5) * geom.ds()), n - 2) *
                        geom.dr() * geom.ds() * tau(i, geom.nr());
      const double d = u.at(i, j + 1) - u.at(i, j);
      acc += static_cast<long double>(we) * d * d * inv_ds2;
    }
  }
  return static_cast<double>(acc);
}

double h1_norm_sq(const AxisymmetricField& u, const DiscreteGeometry& geom) {
  long double acc = dirichlet_energy(u, geom);
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j)
      acc += static_cast<long double>(geom.node_weight(i, j)) * u.at(i, j) * u.at(i, j);
  return static_cast<double>(acc);
}

void write_field_csv(const AxisymmetricField& u, const DiscreteGeometry& geom,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "r,sigma,u\n";
  char buf[96];
  for (int i = 0; i <= geom.nr(); ++i)
    for (int j = 0; j <= geom.ns(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", geom.r(i), geom.sigma(j),
                    u.at(i, j));
      out << buf;
    }
}

AxisymmetricField read_field_csv(const std::string& path, int nr, int ns) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::getline(in, line);  // header
  AxisymmetricField u(nr, ns);
  int k = 0;
  const int total = (nr + 1) * (ns + 1);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (k >= total) throw std::runtime_error("field csv has more rows than nr/ns allow");
    std::istringstream is(line);
    double r, s, val;
    char c1, c2;
    if (!(is >> r >> c1 >> s >> c2 >> val))
      throw std::runtime_error("malformed field csv line: " + line);
    u.v[k++] = val;
  }
  if (k != total) throw std::runtime_error("field csv row count does not match nr/ns");
  return u;
}

}  // namespace nehari
