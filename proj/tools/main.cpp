// Command-line driver: curvature tables, spectral estimates, ground-state
// solves, symmetry diagnostics, constant-curvature classification, and
// hypothesis checks on rotationally symmetric models.
//
// Exit codes: 0 success, 1 configuration error, 2 hypothesis-check failure,
// 3 solver non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nehari/config.hpp"
#include "nehari/curvature_ode.hpp"
#include "nehari/geometry.hpp"
#include "nehari/spectral.hpp"
#include "nehari/symmetry.hpp"
#include "nehari/variational.hpp"

using namespace nehari;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitNoConvergence = 3;

// Minimal deterministic JSON emitter: insertion order, %.17g numbers.
class JsonObject {
 public:
  void put(const std::string& key, double v) { entry(key, g17(v)); }
  void put(const std::string& key, int v) { entry(key, std::to_string(v)); }
  void put(const std::string& key, bool v) { entry(key, v ? "true" : "false"); }
  void put(const std::string& key, const std::string& v) { entry(key, "\"" + v + "\""); }
  void put(const std::string& key, const char* v) { put(key, std::string(v)); }
  void put_raw(const std::string& key, const std::string& raw) { entry(key, raw); }
  void put(const std::string& key, const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + g17(v[i]);
    entry(key, s + "]");
  }

  std::string str() const { return "{" + body_ + "}"; }

 private:
  void entry(const std::string& key, const std::string& val) {
    if (!body_.empty()) body_ += ",";
    body_ += "\"" + key + "\":" + val;
  }
  std::string body_;
};

std::string report_json(const ConditionReport& rep) {
  std::string s = "[";
  for (std::size_t k = 0; k < rep.items.size(); ++k) {
    const auto& it = rep.items[k];
    JsonObject o;
    o.put("name", it.name);
    o.put("passed", it.passed);
    o.put("measured", it.measured);
    if (!it.detail.empty()) o.put("detail", it.detail);
    s += (k ? "," : "") + o.str();
  }
  return s + "]";
}

void emit(const std::string& json, const std::string& path) {
  if (path.empty()) {
    std::cout << json << "\n";
  } else {
    std::ofstream out(path);
    out << json << "\n";
  }
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  RunConfig cfg = path.empty() ? RunConfig{} : parse_config_file(path);
  for (const auto& ov : overrides) apply_override(cfg, ov);
  return cfg;
}

// Reads a field CSV written by write_field_csv, inferring the grid shape.
AxisymmetricField read_field_csv_infer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open field CSV: " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> rs, us;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double r, s, u;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &r, &s, &u) != 3)
      throw std::runtime_error("malformed CSV row: " + line);
    rs.push_back(r);
    us.push_back(u);
  }
  std::size_t cols = 1;
  while (cols < rs.size() && rs[cols] == rs[0]) ++cols;
  if (cols < 2 || us.size() % cols != 0)
    throw std::runtime_error("cannot infer grid shape from " + path);
  AxisymmetricField u(static_cast<int>(us.size() / cols) - 1, static_cast<int>(cols) - 1);
  u.v = us;
  return u;
}

int cmd_curvature(const RunConfig& cfg, const std::string& out_csv, const std::string& out_json,
                  int samples) {
  const ManifoldModel model = make_model(cfg);
  const auto pole = check_pole_conditions(model.profile, 1e-10);

  std::vector<double> grid;
  for (int k = 1; k <= samples; ++k) grid.push_back(cfg.rmax * k / samples);
  const auto bounds = curvature_bounds_report(model, grid);

  if (!out_csv.empty()) {
    std::ofstream out(out_csv);
    out << "r,psi,dpsi,ddpsi,phi,K\n";
    for (double r : grid)
      out << g17(r) << "," << g17(model.profile.psi(r)) << "," << g17(model.profile.dpsi(r))
          << "," << g17(model.profile.ddpsi(r)) << "," << g17(model.profile.phi(r)) << ","
          << g17(scalar_curvature(model, r)) << "\n";
  }

  JsonObject o;
  o.put("profile", model.profile.describe());
  o.put("n", model.n);
  o.put_raw("pole_conditions", report_json(pole));
  o.put_raw("curvature_bounds", report_json(bounds));
  const auto [S, V] = sphere_area_ball_volume(model, cfg.rmax);
  o.put("sphere_area_rmax", S);
  o.put("ball_volume_rmax", V);
  emit(o.str(), out_json);
  return (pole.all_passed() && bounds.all_passed()) ? 0 : kExitHypothesis;
}

int cmd_spectrum(const RunConfig& cfg, const std::string& out_json, const std::string& out_csv,
                 std::vector<double> schedule) {
  const ManifoldModel model = make_model(cfg);
  const auto ball = lambda1_ball(model, cfg.rmax, std::max(cfg.nr, 64));
  if (!out_csv.empty()) {
    std::ofstream out(out_csv);
    out << "R,lambda1\n";
    if (schedule.empty()) {
      out << g17(cfg.rmax) << "," << g17(ball.eigenvalue) << "\n";
    } else {
      for (double R : schedule)
        out << g17(R) << "," << g17(lambda1_ball(model, R, std::max(cfg.nr, 64)).eigenvalue)
            << "\n";
    }
  }
  JsonObject o;
  o.put("profile", model.profile.describe());
  o.put("n", model.n);
  o.put("rmax", cfg.rmax);
  o.put("lambda1_ball", ball.eigenvalue);
  o.put("iterations", ball.iterations);
  o.put("residual", ball.residual);
  if (!schedule.empty()) {
    const auto seq = lambda1_manifold(model, schedule, 1e-6);
    o.put("schedule", seq.radii);
    o.put("values", seq.values);
    o.put("lambda1_manifold", seq.limit);
    o.put("plateau_converged", seq.converged);
  }
  emit(o.str(), out_json);
  return 0;
}

int cmd_solve(const RunConfig& cfg, const std::string& field_csv, const std::string& out_json,
              bool skip_checks) {
  const DiscreteGeometry geom = make_geometry(cfg);
  const Nonlinearity f = make_nonlinearity(cfg);
  if (!skip_checks) {
    std::vector<double> r_grid;
    for (int k = 1; k <= 600; ++k) r_grid.push_back(std::max(cfg.rmax, 60.0) * k / 600.0);
    const auto compact = check_compactness_hypotheses(make_model(cfg), f.weight(), f.p(), r_grid);
    if (!compact.all_passed()) {
      std::cerr << "compact-embedding hypothesis check failed (use --force to solve anyway):\n";
      for (const auto& it : compact.items)
        if (!it.passed) std::cerr << "  FAIL " << it.name << " (measured " << it.measured << ")\n";
      return kExitHypothesis;
    }
  }
  GroundStateResult res;
  try {
    res = solve_ground_state(geom, f, cfg.solver);
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  }
  if (!field_csv.empty()) write_field_csv(res.field, geom, field_csv);

  const auto sym = foliated_schwarz_check(res.field, geom, 1e-6);
  JsonObject o;
  o.put("energy", res.energy);
  o.put("pde_residual", res.pde_residual);
  o.put("projected_grad_norm", res.projected_grad_norm);
  o.put("iterations", res.iterations);
  o.put("converged", res.converged);
  o.put("nehari_residual", nehari_residual(res.field, geom, f));
  o.put("t_final", res.t_history.empty() ? 0.0 : res.t_history.back());
  o.put("sign", sym.sign == FieldSign::Positive
                    ? "positive"
                    : (sym.sign == FieldSign::Negative ? "negative" : "mixed"));
  o.put("is_radial", sym.is_radial);
  o.put("is_foliated_schwarz", sym.is_foliated_schwarz);
  emit(o.str(), out_json);
  return res.converged ? 0 : kExitNoConvergence;
}

int cmd_symmetry(const RunConfig& cfg, const std::string& field_csv,
                 const std::string& out_json, double tol) {
  const AxisymmetricField u = read_field_csv_infer(field_csv);
  RunConfig gcfg = cfg;
  gcfg.nr = u.nr;
  gcfg.nsigma = u.ns;
  const DiscreteGeometry geom = make_geometry(gcfg);
  const auto rep = foliated_schwarz_check(u, geom, tol);
  const auto inv = polarization_invariance_check(u, geom, make_nonlinearity(cfg));

  JsonObject o;
  o.put("sign", rep.sign == FieldSign::Positive
                    ? "positive"
                    : (rep.sign == FieldSign::Negative ? "negative" : "mixed"));
  o.put("is_radial", rep.is_radial);
  o.put("is_sigma_monotone", rep.is_sigma_monotone);
  o.put("is_foliated_schwarz", rep.is_foliated_schwarz);
  o.put("axis_flipped", rep.axis_flipped);
  o.put("max_sigma_variation", rep.max_sigma_variation);
  o.put("polarization_energy_gap", rep.polarization_energy_gap);
  o.put("product_form_residual", rep.product_form_residual);
  o.put_raw("polarization_invariance", report_json(inv));
  emit(o.str(), out_json);
  return 0;
}

int cmd_classify(int n, double kappa, double rmax, double h, const std::string& out_json,
                 const std::string& out_csv) {
  const auto run = integrate_profile_ode(n, kappa, rmax, h);
  if (!out_csv.empty()) {
    std::ofstream out(out_csv);
    out << "r,psi,dpsi\n";
    for (std::size_t k = 0; k < run.r.size(); ++k)
      out << g17(run.r[k]) << "," << g17(run.psi[k]) << "," << g17(run.dpsi[k]) << "\n";
  }
  JsonObject o;
  o.put("n", run.n);
  o.put("kappa", run.kappa);
  o.put("beta", run.beta);
  o.put("classified_as", run.comparison.describe());
  o.put("max_rel_deviation", run.max_rel_deviation);
  o.put("samples", static_cast<int>(run.r.size()));
  emit(o.str(), out_json);
  return 0;
}

int cmd_check(const RunConfig& cfg, const std::string& out_json) {
  const ManifoldModel model = make_model(cfg);
  const Nonlinearity f = make_nonlinearity(cfg);

  const auto pole = check_pole_conditions(model.profile, 1e-10);
  const double lam1 = lambda1_ball(model, cfg.rmax, std::max(cfg.nr, 64)).eigenvalue;

  std::vector<std::pair<double, double>> sample;
  for (int i = 1; i <= 12; ++i)
    for (double s : {-3.0, -0.7, -0.01, 0.01, 0.4, 1.0, 5.0})
      sample.emplace_back(cfg.rmax * i / 12.0, s);
  const auto structural = check_structural_conditions(f, model, sample, lam1);

  std::vector<double> r_grid;
  for (int k = 1; k <= 600; ++k) r_grid.push_back(std::max(cfg.rmax, 60.0) * k / 600.0);
  const auto compact = check_compactness_hypotheses(model, f.weight(), f.p(), r_grid);

  JsonObject o;
  o.put("lambda1_ball", lam1);
  o.put_raw("pole_conditions", report_json(pole));
  o.put_raw("structural_conditions", report_json(structural));
  o.put_raw("compactness", report_json(compact));
  const bool ok = pole.all_passed() && structural.all_passed() && compact.all_passed();
  o.put("all_passed", ok);
  emit(o.str(), out_json);
  return ok ? 0 : kExitHypothesis;
}

int cmd_nonexist(const RunConfig& cfg, const std::string& out_json) {
  const DiscreteGeometry geom = make_geometry(cfg);
  const Nonlinearity f = make_nonlinearity(cfg);
  const auto rep = nonexistence_probe(geom, f, cfg.solver);
  JsonObject o;
  o.put("lambda", rep.lambda);
  o.put("lambda1_ball", rep.lambda1_ball_value);
  o.put("candidates", rep.candidates);
  o.put("converged_one_signed", rep.converged_one_signed);
  o.put("min_pairing_margin", rep.min_pairing_margin);
  o.put("best_residual", rep.best_residual);
  o.put("solver_hypothesis_violation", rep.solver_hypothesis_violation);
  emit(o.str(), out_json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ground states of -Delta_g u = f(r,u) on rotationally symmetric models"};
  app.require_subcommand(1);

  std::string config_path, out_csv, out_json, field_csv;
  std::vector<std::string> overrides;
  int samples = 200;
  double tol = 1e-6;
  int cls_n = 3;
  double cls_kappa = 0.0, cls_rmax = 5.0, cls_h = 1e-3;
  std::vector<double> schedule;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "run configuration file");
    sub->add_option("--set", overrides, "key=value override (repeatable)");
    sub->add_option("--json", out_json, "write the JSON report here (default: stdout)");
  };

  auto* curvature = app.add_subcommand("curvature", "profile and curvature tables");
  add_common(curvature);
  curvature->add_option("--csv", out_csv, "write r,psi,dpsi,ddpsi,phi,K samples");
  curvature->add_option("--samples", samples, "sample count on (0, rmax]");

  auto* spectrum = app.add_subcommand("spectrum", "lambda1 of balls and of the manifold");
  add_common(spectrum);
  spectrum->add_option("--schedule", schedule, "radii for the plateau estimate");
  spectrum->add_option("--csv", out_csv, "write the R,lambda1 table");

  bool force = false, radial_only = false;
  int opt_nr = -1, opt_ns = -1, opt_seed = -1;
  double opt_rmax = -1.0;
  auto* solve = app.add_subcommand("solve", "compute the ground state");
  add_common(solve);
  solve->add_option("--field", field_csv, "write the solution field CSV");
  solve->add_flag("--force", force, "solve even if the embedding hypothesis check fails");
  solve->add_flag("--radial-only", radial_only, "restrict to radial fields");
  solve->add_option("--rmax", opt_rmax, "truncation radius override");
  solve->add_option("--nr", opt_nr, "radial node count override");
  solve->add_option("--nsigma", opt_ns, "angular node count override (even)");
  solve->add_option("--seed", opt_seed, "random-initialization seed override");

  auto* symmetry = app.add_subcommand("symmetry", "symmetry diagnostics of a stored field");
  add_common(symmetry);
  symmetry->add_option("--field", field_csv, "field CSV to analyze")->required();
  symmetry->add_option("--tol", tol, "relative tolerance of the diagnostics");

  auto* classify = app.add_subcommand("classify", "constant-curvature profile classification");
  classify->add_option("--n", cls_n, "dimension")->required();
  classify->add_option("--kappa", cls_kappa, "constant scalar curvature")->required();
  classify->add_option("--rmax", cls_rmax, "integration range");
  classify->add_option("--step", cls_h, "RK4 step");
  classify->add_option("--json", out_json, "write the JSON report here");
  classify->add_option("--csv", out_csv, "write the r,psi,dpsi samples");

  auto* check =
      app.add_subcommand("check-hypotheses", "structural and compactness hypothesis checks");
  check->alias("check");
  add_common(check);

  auto* nonexist = app.add_subcommand("nonexist", "positive-solution nonexistence probe");
  add_common(nonexist);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = load_config(config_path, overrides);
    if (solve->parsed()) {
      if (radial_only) cfg.solver.radial_only = true;
      if (opt_rmax > 0.0) cfg.rmax = opt_rmax;
      if (opt_nr > 0) cfg.nr = opt_nr;
      if (opt_ns > 0) cfg.nsigma = opt_ns;
      if (opt_seed >= 0) cfg.solver.seed = static_cast<unsigned long>(opt_seed);
      return cmd_solve(cfg, field_csv, out_json, force);
    }
    if (curvature->parsed()) return cmd_curvature(cfg, out_csv, out_json, samples);
    if (spectrum->parsed()) return cmd_spectrum(cfg, out_json, out_csv, schedule);
    if (symmetry->parsed()) return cmd_symmetry(cfg, field_csv, out_json, tol);
    if (classify->parsed())
      return cmd_classify(cls_n, cls_kappa, cls_rmax, cls_h, out_json, out_csv);
    if (check->parsed()) return cmd_check(cfg, out_json);
    if (nonexist->parsed()) return cmd_nonexist(cfg, out_json);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  }
  return 0;
}
