#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nehari/discretization.hpp"
#include "nehari/nonlinearity.hpp"

namespace nehari {

/// The quadratic-form positivity needed by the fiber projection failed;
/// typically lambda >= lambda1 or a weight vanishing on the support.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverConfig {
  enum class Init { RadialBump, TiltedBump, RandomSeeded };

  int max_outer_iterations = 4000;
  double step_init = 1.0;
  double step_grow = 1.3;
  double backtrack_factor = 0.5;
  double armijo = 1e-4;
  double nehari_tol = 1e-13;    // relative fiber-root tolerance
  double residual_tol = 1e-5;   // relative PDE residual for "converged"
  double grad_tol = 1e-7;       // projected-gradient stopping threshold
  Init init = Init::TiltedBump;
  double tilt_sigma0 = 0.0;
  unsigned long seed = 1234;
  bool radial_only = false;
  bool positive_cone = false;   // clamp iterates to u >= 0 (nonexistence probe)
  int cg_max_iters = 1200;
  /// Called with each accepted Nehari-projected iterate.
  std::function<void(const AxisymmetricField&, double energy)> iterate_hook;
};

struct GroundStateResult {
  AxisymmetricField field;
  double energy = 0.0;
  std::vector<double> t_history;
  double pde_residual = 0.0;         // relative to ||u||_{H^1}
  double projected_grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool hypothesis_violation = false;
};

/// Phi(u) = 1/2 int |grad u|^2 - int F(r,u).
double action(const AxisymmetricField& u, const DiscreteGeometry& geom, const Nonlinearity& f);

/// I(u) = int |grad u|^2 - int f(r,u) u; zero exactly on the Nehari manifold.
double nehari_residual(const AxisymmetricField& u, const DiscreteGeometry& geom,
                       const Nonlinearity& f);

/// Unique t > 0 with I(t v) = 0: geometric bracketing, bisection, secant polish.
/// Throws HypothesisViolation if no sign change can be bracketed.
std::pair<double, AxisymmetricField> nehari_project(const AxisymmetricField& v,
                                                    const DiscreteGeometry& geom,
                                                    const Nonlinearity& f,
                                                    double rel_tol = 1e-13);

/// Ground state by projected descent of Phi over the Nehari manifold
/// (Sobolev-gradient descent on the H^1 unit sphere composed with the fiber map).
GroundStateResult solve_ground_state(const DiscreteGeometry& geom, const Nonlinearity& f,
                                     const SolverConfig& config);

struct MinimaxValue {
  double value = 0.0;     // Phi(t_v v), the fiber maximum
  double scan_max = 0.0;  // cross-check: max of Phi(t v) over the scan grid
};

MinimaxValue minimax_energy(const AxisymmetricField& v, const DiscreteGeometry& geom,
                            const Nonlinearity& f, const std::vector<double>& t_grid);

/// Dual-norm proxy of -Delta_g u - f(r,u), relative to ||u||_{H^1}.
double pde_residual(const AxisymmetricField& u, const DiscreteGeometry& geom,
                    const Nonlinearity& f);

struct NonexistenceReport {
  double lambda = 0.0;
  double lambda1_ball_value = 0.0;
  int candidates = 0;
  int converged_one_signed = 0;    // falsification events
  double min_pairing_margin = 0.0; // over all positive candidates
  double best_residual = 0.0;
  bool solver_hypothesis_violation = false;
};

/// Positive-cone probe of the spectral nonexistence threshold: requires
/// lambda > lambda1(B_Rmax) and evaluates the eigenfunction pairing test on
/// every candidate iterate.
NonexistenceReport nonexistence_probe(const DiscreteGeometry& geom, const Nonlinearity& f,
                                      const SolverConfig& config);

}  // namespace nehari
