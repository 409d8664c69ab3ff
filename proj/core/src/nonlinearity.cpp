#include "nehari/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nehari {

WeightSpec WeightSpec::constant(double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("constant weight must be >= 0");
  return {Form::Constant, c};
}

WeightSpec WeightSpec::phi_power(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("phi-power exponent must be >= 0");
  return {Form::PhiPower, alpha};
}

double WeightSpec::operator()(const PsiProfile& profile, double r) const {
  switch (form) {
    case Form::Constant: return value;
    case Form::PhiPower: return std::pow(profile.phi(r), -value);
  }
  return 0.0;
}

Nonlinearity::Nonlinearity(double lambda, double p, WeightSpec weight, double mu)
    : lambda_(lambda), p_(p), mu_(mu), weight_(weight) {
  if (!(p > 1.0)) throw std::invalid_argument("exponent p must exceed 1");
  if (!(mu > 2.0)) throw std::invalid_argument("superquadraticity constant mu must exceed 2");
}

NonlinearityValues Nonlinearity::evaluate(const PsiProfile& profile, double r, double s) const {
  if (custom_) return custom_(r, s);
  const double W = weight_(profile, r);
  const double as = std::abs(s);
  const double pw = std::pow(as, p_ - 1.0);
  NonlinearityValues v;
  v.f = lambda_ * s + W * pw * s;
  v.dfs = lambda_ + p_ * W * pw;
  v.F = 0.5 * lambda_ * s * s + W * std::pow(as, p_ + 1.0) / (p_ + 1.0);
  v.H = v.F - 0.5 * lambda_ * s * s;
  return v;
}

ConditionReport check_structural_conditions(const Nonlinearity& f, const ManifoldModel& model,
                                            const std::vector<std::pair<double, double>>& sample,
                                            double lambda1) {
  if (sample.empty()) throw std::invalid_argument("sample must be nonempty");
  const auto& pr = model.profile;

  double worst_f2 = -std::numeric_limits<double>::infinity();
  double needed_C = 0.0;
  double needed_mult = 0.0;  // smallest c with f'_s <= lambda + c W |s|^{p-1}
  double worst_f4_low = std::numeric_limits<double>::infinity();   // min mu H over s != 0
  double worst_f4_up = -std::numeric_limits<double>::infinity();   // max (mu H - h s)

  for (const auto& [r, s] : sample) {
    const auto v = f.evaluate(pr, r, s);
    const double W = f.weight()(pr, r);
    const double pw = std::pow(std::abs(s), f.p() - 1.0);

    if (s != 0.0) {
      worst_f2 = std::max(worst_f2, v.f * s - v.dfs * s * s);

      const double h = v.f - f.lambda() * s;
      worst_f4_low = std::min(worst_f4_low, f.mu() * v.H);
      worst_f4_up = std::max(worst_f4_up, f.mu() * v.H - h * s);
    }

    // (f3) two-sided growth. W is only determined up to a constant multiple by
    // the bound, so the upper side asks for the smallest admissible multiple.
    const double excess = v.dfs - f.lambda();
    if (excess > 0.0) {
      const double denom = W * pw;
      needed_mult = (denom > 0.0) ? std::max(needed_mult, excess / denom)
                                  : std::numeric_limits<double>::infinity();
    }
    needed_C = std::max(needed_C, -v.dfs - W * pw);
  }

  const double tol = 1e-12;
  ConditionReport rep;
  rep.add("(f2) f s - f'_s s^2 < 0", worst_f2 < 0.0, worst_f2);
  {
    std::ostringstream os;
    os << "smallest admissible multiple of W = " << needed_mult;
    rep.add("(f3) f'_s <= lambda + c W |s|^{p-1}", std::isfinite(needed_mult), needed_mult,
            os.str());
  }
  {
    // Any finite C works on a finite sample; report the smallest one.
    std::ostringstream os;
    os << "smallest admissible C = " << needed_C;
    rep.add("(f3) f'_s >= -C - W |s|^{p-1}", std::isfinite(needed_C), needed_C, os.str());
  }
  rep.add("(f3) lambda < lambda1(M)", f.lambda() < lambda1, f.lambda() - lambda1);
  rep.add("(f4) mu H > 0", worst_f4_low > 0.0, worst_f4_low);
  rep.add("(f4) mu H <= h s", worst_f4_up <= tol, worst_f4_up);
  return rep;
}

ConditionReport check_compactness_hypotheses(const ManifoldModel& model, const WeightSpec& W,
                                             double p, const std::vector<double>& r_grid,
                                             const CompactnessOptions& opt) {
  if (r_grid.size() < 8 || r_grid.back() < 50.0)
    throw std::invalid_argument("compactness check needs a grid extending to r >= 50");
  const auto& pr = model.profile;
  const int n = model.n;
  const std::size_t m = r_grid.size();

  std::vector<double> phi(m), w(m), g_ii(m), g_phi(m), ratio(m);
  for (std::size_t k = 0; k < m; ++k) {
    phi[k] = pr.phi(r_grid[k]);
    w[k] = W(pr, r_grid[k]);
    g_ii[k] = std::pow(phi[k], n - 1) * w[k];
    g_phi[k] = std::pow(phi[k], n - 3);
    ratio[k] = w[k] * std::pow(phi[k], 0.5 * (p - 1.0));
  }

  ConditionReport rep;

  // (i) phi >= 1 on the grid.
  double min_phi = *std::min_element(phi.begin(), phi.end());
  rep.add("(i) phi >= 1", min_phi >= 1.0 - 1e-12, min_phi);

  // (ii) detect the smallest grid point R beyond which both functions are nondecreasing.
  std::size_t R_idx = m;  // m means "never"
  for (std::size_t start = 0; start + 1 < m; ++start) {
    bool mono = true;
    for (std::size_t k = start; k + 1 < m; ++k) {
      const double tol_ii = opt.monotone_tol * (1.0 + std::abs(g_ii[k]));
      const double tol_ph = opt.monotone_tol * (1.0 + std::abs(g_phi[k]));
      if (g_ii[k + 1] < g_ii[k] - tol_ii || g_phi[k + 1] < g_phi[k] - tol_ph) {
        mono = false;
        break;
      }
    }
    if (mono) {
      R_idx = start;
      break;
    }
  }
  const bool ii_ok = R_idx + 1 < m;
  {
    std::ostringstream os;
    if (ii_ok) os << "monotone beyond R = " << r_grid[R_idx];
    rep.add("(ii) phi^{n-1} W and phi^{n-3} nondecreasing beyond R", ii_ok,
            ii_ok ? r_grid[R_idx] : -1.0, os.str());
  }
  const std::size_t a = ii_ok ? R_idx : 0;  // anchor for the tail tests

  // (iii) W = o(phi^{-(p-1)/2}): strict tail decay of ratio = W phi^{(p-1)/2}.
  // A nonincreasing ratio on a divergent phi counts as a borderline pass; this is
  // the alpha = (p-1)/2 endpoint of the phi-power family.
  double tail_lo = r_grid.back() / 10.0;
  double q_tail = 0.0;
  for (std::size_t k = a; k < m; ++k)
    if (r_grid[k] >= tail_lo) q_tail = std::max(q_tail, ratio[k]);
  const double q_anchor = std::max(ratio[a], std::numeric_limits<double>::min());
  const bool strict = q_tail <= opt.decay_ratio * q_anchor;
  bool nonincreasing = true;
  for (std::size_t k = a; k + 1 < m; ++k)
    if (ratio[k + 1] > ratio[k] + 1e-10 * (1.0 + std::abs(ratio[k]))) {
      nonincreasing = false;
      break;
    }
  const bool phi_divergent = phi.back() > 2.0 * std::max(phi[a], 1.0);
  const bool iii_ok = strict || (nonincreasing && phi_divergent);
  {
    std::ostringstream os;
    os << "tail/anchor ratio = " << q_tail / q_anchor
       << (strict ? " (strict decay)" : nonincreasing && phi_divergent ? " (borderline)" : "");
    rep.add("(iii) W = o(phi^{-(p-1)/2})", iii_ok, q_tail / q_anchor, os.str());
  }

  // Embedding quantity b0^{1/(p+1)} b1^{-1/2} delta^{n/(p+1)-n/2+1} on the tail.
  auto embed_q = [&](double r) {
    const double delta = std::min(1.0 / pr.phi(r), r / 3.0);
    const double b0 = std::pow(pr.phi(r + delta), n - 1) * W(pr, r + delta);
    const double b1 = std::pow(pr.phi(std::max(r - delta, 1e-8)), n - 3);
    const double e = n / (p + 1.0) - 0.5 * n + 1.0;
    return std::pow(b0, 1.0 / (p + 1.0)) / std::sqrt(b1) * std::pow(delta, e);
  };
  bool embed_ok = true;
  double prev = -1.0, last = 0.0;
  for (std::size_t k = a; k < m; ++k) {
    if (r_grid[k] < tail_lo) continue;
    last = embed_q(r_grid[k]);
    if (prev >= 0.0 && last > prev * (1.0 + 1e-8)) {
      embed_ok = false;
      break;
    }
    prev = last;
  }
  rep.add("embedding quantity nonincreasing on tail", embed_ok, last);

  rep.add("compact embedding H^1(M) -> L^{p+1}(M;W)",
          rep.items[0].passed && ii_ok && iii_ok, 0.0);
  return rep;
}

}  // namespace nehari
