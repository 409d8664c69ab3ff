#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "nehari/geometry.hpp"
#include "nehari/report.hpp"

namespace nehari {

/// Radial weight W(r): either a constant or phi(r)^{-alpha}.
struct WeightSpec {
  enum class Form { Constant, PhiPower };

  Form form = Form::Constant;
  double value = 1.0;  // constant c >= 0, or exponent alpha >= 0

  static WeightSpec constant(double c);
  static WeightSpec phi_power(double alpha);

  double operator()(const PsiProfile& profile, double r) const;
};

/// Pointwise values returned by Nonlinearity::evaluate.
struct NonlinearityValues {
  double f;    // f(r,s)
  double dfs;  // d f / d s
  double F;    // primitive in s
  double H;    // F - lambda s^2 / 2
};

/// f(r,s) = lambda s + W(r)|s|^{p-1} s with its primitives, plus optional
/// user-supplied evaluators replacing the power family.
class Nonlinearity {
 public:
  using Evaluator = std::function<NonlinearityValues(double r, double s)>;

  Nonlinearity(double lambda, double p, WeightSpec weight, double mu);

  /// Replaces the power-family evaluation; structural conditions are then only
  /// sampled, never guaranteed.
  void set_custom(Evaluator ev) { custom_ = std::move(ev); }
  bool is_power_family() const { return !custom_; }

  NonlinearityValues evaluate(const PsiProfile& profile, double r, double s) const;

  double lambda() const { return lambda_; }
  double p() const { return p_; }
  double mu() const { return mu_; }
  const WeightSpec& weight() const { return weight_; }

 private:
  double lambda_;
  double p_;
  double mu_;
  WeightSpec weight_;
  Evaluator custom_;
};

/// Samples (f2)-(f4) on the given (r,s) pairs. lambda1 is the spectral estimate
/// used for the lambda < lambda1(M) clause of (f3); pass +inf to skip it.
ConditionReport check_structural_conditions(const Nonlinearity& f, const ManifoldModel& model,
                                            const std::vector<std::pair<double, double>>& sample,
                                            double lambda1);

struct CompactnessOptions {
  double decay_ratio = 1e-3;     // tail/anchor ratio certifying strict decay in (iii)
  double monotone_tol = 1e-10;   // slack allowed in the nondecreasing checks
};

/// Empirically checks hypotheses (i)-(iii) guaranteeing the compact embedding
/// H^1(M) into L^{p+1}(M;W), plus the tail decay of the embedding quantity
/// b0^{1/(p+1)} b1^{-1/2} delta^{n/(p+1)-n/2+1}.
ConditionReport check_compactness_hypotheses(const ManifoldModel& model, const WeightSpec& W,
                                             double p, const std::vector<double>& r_grid,
                                             const CompactnessOptions& opt = {});

}  // namespace nehari
