#pragma once

#include <stdexcept>
#include <string>

#include "nehari/discretization.hpp"
#include "nehari/nonlinearity.hpp"
#include "nehari/variational.hpp"

namespace nehari {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One run description, parsed from `key = value` lines ('#' starts a comment).
///
/// Keys:
///   n, rmax, nr, nsigma
///   psi.kind = euclidean | hyperbolic | blended
///   psi.alpha                       (hyperbolic)
///   psi.law  = exp_linear | exp_power | poly_exp | poly_exp_power
///   psi.a, psi.b, psi.r0            (blended)
///   f.lambda, f.p, f.mu
///   f.weight = const:<c> | phipow:<alpha>
///   solver.max_iters, solver.residual_tol, solver.grad_tol, solver.seed,
///   solver.init = radial | tilted | random, solver.radial_only = 0|1
struct RunConfig {
  int n = 3;
  double rmax = 8.0;
  int nr = 256;
  int nsigma = 64;

  std::string psi_kind = "hyperbolic";
  double psi_alpha = 1.0;
  std::string psi_law = "exp_linear";
  double psi_a = 1.0;
  double psi_b = 0.0;
  double psi_r0 = 1.0;

  double lambda = 0.0;
  double p = 3.0;
  double mu = 3.0;
  std::string weight = "const:1";

  SolverConfig solver;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);
/// Applies a single `key=value` override in place.
void apply_override(RunConfig& cfg, const std::string& assignment);

PsiProfile make_profile(const RunConfig& cfg);
ManifoldModel make_model(const RunConfig& cfg);
WeightSpec make_weight(const RunConfig& cfg);
Nonlinearity make_nonlinearity(const RunConfig& cfg);
DiscreteGeometry make_geometry(const RunConfig& cfg);

/// Shortest round-trip decimal form of a double (%.17g trimmed), locale-free.
std::string g17(double x);

}  // namespace nehari
