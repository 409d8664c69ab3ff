#include "nehari/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nehari {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& val) {
  char* end = nullptr;
  const double x = std::strtod(val.c_str(), &end);
  if (end == val.c_str() || *end != '\0')
    throw ConfigError("bad numeric value for '" + key + "': " + val);
  return x;
}

int parse_int(const std::string& key, const std::string& val) {
  const double x = parse_double(key, val);
  const int k = static_cast<int>(x);
  if (k != x) throw ConfigError("expected integer for '" + key + "': " + val);
  return k;
}

void assign(RunConfig& cfg, const std::string& key, const std::string& val) {
  if (key == "n")
    cfg.n = parse_int(key, val);
  else if (key == "rmax")
    cfg.rmax = parse_double(key, val);
  else if (key == "nr")
    cfg.nr = parse_int(key, val);
  else if (key == "nsigma")
    cfg.nsigma = parse_int(key, val);
  else if (key == "psi.kind")
    cfg.psi_kind = val;
  else if (key == "psi.alpha")
    cfg.psi_alpha = parse_double(key, val);
  else if (key == "psi.law")
    cfg.psi_law = val;
  else if (key == "psi.a")
    cfg.psi_a = parse_double(key, val);
  else if (key == "psi.b")
    cfg.psi_b = parse_double(key, val);
  else if (key == "psi.r0")
    cfg.psi_r0 = parse_double(key, val);
  else if (key == "f.lambda")
    cfg.lambda = parse_double(key, val);
  else if (key == "f.p")
    cfg.p = parse_double(key, val);
  else if (key == "f.mu")
    cfg.mu = parse_double(key, val);
  else if (key == "f.weight") {
    cfg.weight = val;
    make_weight(cfg);  // validate eagerly so bad forms fail at the offending line
  }
  else if (key == "solver.max_iters")
    cfg.solver.max_outer_iterations = parse_int(key, val);
  else if (key == "solver.residual_tol")
    cfg.solver.residual_tol = parse_double(key, val);
  else if (key == "solver.grad_tol")
    cfg.solver.grad_tol = parse_double(key, val);
  else if (key == "solver.seed")
    cfg.solver.seed = static_cast<unsigned long>(parse_int(key, val));
  else if (key == "solver.radial_only")
    cfg.solver.radial_only = parse_int(key, val) != 0;
  else if (key == "solver.init") {
    if (val == "radial")
      cfg.solver.init = SolverConfig::Init::RadialBump;
    else if (val == "tilted")
      cfg.solver.init = SolverConfig::Init::TiltedBump;
    else if (val == "random")
      cfg.solver.init = SolverConfig::Init::RandomSeeded;
    else
      throw ConfigError("unknown solver.init: " + val);
  } else
    throw ConfigError("unknown key: " + key);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    try {
      assign(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("override must be key=value: " + assignment);
  assign(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

PsiProfile make_profile(const RunConfig& cfg) {
  if (cfg.psi_kind == "euclidean") return PsiProfile::euclidean();
  if (cfg.psi_kind == "hyperbolic") return PsiProfile::hyperbolic(cfg.psi_alpha);
  if (cfg.psi_kind == "blended") {
    GrowthLaw law;
    if (cfg.psi_law == "exp_linear")
      law = GrowthLaw::ExpLinear;
    else if (cfg.psi_law == "exp_power")
      law = GrowthLaw::ExpPower;
    else if (cfg.psi_law == "poly_exp")
      law = GrowthLaw::PolyExp;
    else if (cfg.psi_law == "poly_exp_power")
      law = GrowthLaw::PolyExpPower;
    else
      throw ConfigError("unknown psi.law: " + cfg.psi_law);
    return PsiProfile::blended(law, cfg.psi_a, cfg.psi_b, cfg.psi_r0);
  }
  throw ConfigError("unknown psi.kind: " + cfg.psi_kind);
}

ManifoldModel make_model(const RunConfig& cfg) { return ManifoldModel(cfg.n, make_profile(cfg)); }

WeightSpec make_weight(const RunConfig& cfg) {
  const std::size_t colon = cfg.weight.find(':');
  const std::string form = cfg.weight.substr(0, colon);
  const std::string arg = (colon == std::string::npos) ? "1" : cfg.weight.substr(colon + 1);
  if (form == "const") return WeightSpec::constant(parse_double("f.weight", arg));
  if (form == "phipow") return WeightSpec::phi_power(parse_double("f.weight", arg));
  throw ConfigError("unknown f.weight form: " + cfg.weight);
}

Nonlinearity make_nonlinearity(const RunConfig& cfg) {
  return Nonlinearity(cfg.lambda, cfg.p, make_weight(cfg), cfg.mu);
}

DiscreteGeometry make_geometry(const RunConfig& cfg) {
  return DiscreteGeometry::build(make_model(cfg), cfg.rmax, cfg.nr, cfg.nsigma);
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace nehari
