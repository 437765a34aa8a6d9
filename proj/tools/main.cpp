// Command line front end: classify / solve / sweep / bubbles over a flat
// key=value config.  Exit codes: 0 ok, 2 config error, 3 hypothesis gate
// failure, 4 numeric failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "logcrit/report.hpp"

using namespace logcrit;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> known_keys = {
    "lambda1", "mu1",        "theta1",     "lambda2",    "mu2",
    "theta2",  "beta",       "radius",     "n",          "solver_tol",
    "projection_tol",        "quad_check_tol",           "seed",
    "eps_list", "restarts",  "segments",   "pipeline",   "force",
    "sweep_axis1", "sweep_axis2", "beta0_cap_factor"};

struct RunConfig {
  ParameterSet params;
  int n = 256;
  double solver_tol = 1e-8;
  double projection_tol = 1e-12;
  double quad_check_tol = 1e-12;
  unsigned seed = 20240817;
  std::vector<double> eps_list{0.2, 0.1, 0.05};
  int restarts = 50;
  int segments = 24;
  std::string pipeline = "local_ball";
  bool force = false;
  std::string sweep_axis1, sweep_axis2;
};

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig c;
  std::string line;
  int lineno = 0;
  std::map<std::string, double ParameterSet::*> fields = {
      {"lambda1", &ParameterSet::lambda1}, {"mu1", &ParameterSet::mu1},
      {"theta1", &ParameterSet::theta1},   {"lambda2", &ParameterSet::lambda2},
      {"mu2", &ParameterSet::mu2},         {"theta2", &ParameterSet::theta2},
      {"beta", &ParameterSet::beta},       {"radius", &ParameterSet::radius},
      {"beta0_cap_factor", &ParameterSet::beta0_cap_factor}};
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
    line.erase(line.begin(), std::find_if(line.begin(), line.end(), notspace));
    line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(), line.end());
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') continue;  // section marker
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    key.erase(std::find_if(key.rbegin(), key.rend(), notspace).base(), key.end());
    val.erase(val.begin(), std::find_if(val.begin(), val.end(), notspace));
    if (!known_keys.count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    try {
      if (auto it = fields.find(key); it != fields.end())
        c.params.*(it->second) = std::stod(val);
      else if (key == "n")
        c.n = std::stoi(val);
      else if (key == "solver_tol")
        c.solver_tol = std::stod(val);
      else if (key == "projection_tol")
        c.projection_tol = std::stod(val);
      else if (key == "quad_check_tol")
        c.quad_check_tol = std::stod(val);
      else if (key == "seed")
        c.seed = static_cast<unsigned>(std::stoul(val));
      else if (key == "eps_list")
        c.eps_list = parse_list(val);
      else if (key == "restarts")
        c.restarts = std::stoi(val);
      else if (key == "segments")
        c.segments = std::stoi(val);
      else if (key == "pipeline")
        c.pipeline = val;
      else if (key == "force")
        c.force = (val == "true" || val == "1");
      else if (key == "sweep_axis1")
        c.sweep_axis1 = val;
      else if (key == "sweep_axis2")
        c.sweep_axis2 = val;
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("line " + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
  return c;
}

bool has_theorem(const ClassificationReport& rep, const std::string& prefix) {
  for (const auto& t : rep.applicable_theorems)
    if (t.id.rfind(prefix, 0) == 0) return true;
  return false;
}

int cmd_classify(const RunConfig& c) {
  std::cout << to_json(classify(c.params)).dump(2) << '\n';
  return 0;
}

int cmd_solve(const RunConfig& c) {
  ClassificationReport rep = classify(c.params);
  auto grid = make_grid(c.params.radius, c.n);
  bool gated = false;
  std::string gate_note;
  SolveResult res;

  if (c.pipeline == "local_ball") {
    if (!has_theorem(rep, "T1.2")) {
      gated = true;
      gate_note = "local_ball pipeline needs the Theorem 1.2 gates";
    }
    if (gated && !c.force) throw GateError(gate_note);
    DomainConstants dc = rep.constants;
    double rho;
    try {
      rho = rho_delta(c.params, dc).rho;
    } catch (const precondition_error&) {
      if (!c.force) throw;
      rho = dc.sobolev_S / std::sqrt(c.params.max_mu());
    }
    StatePair init(seed_bump(grid, 0.1), seed_bump(grid, 0.1));
    if (init.h1_norm() >= 0.9 * rho) {
      double sc = 0.5 * rho / init.h1_norm();
      init = StatePair(RadialField(grid, sc * init.u.values()),
                       RadialField(grid, sc * init.v.values()));
    }
    res = minimize_local_ball(c.params, init, rho, c.solver_tol);
  } else if (c.pipeline == "nehari") {
    if (!has_theorem(rep, "T1.1")) {
      gated = true;
      gate_note = "nehari pipeline needs the Theorem 1.1 gates";
    }
    if (gated && !c.force) throw GateError(gate_note);
    StatePair init(seed_bump(grid, 1.0),
                   bubble_field(0.1 * c.params.radius, grid, c.params.radius / 4.0));
    res = minimize_on_nehari(c.params, init, c.solver_tol);
  } else if (c.pipeline == "mountain_pass") {
    if (!has_theorem(rep, "T1.5")) {
      gated = true;
      gate_note = "mountain_pass pipeline needs the Theorem 1.5 gates";
    }
    if (gated && !c.force) throw GateError(gate_note);
    StatePair end_a = StatePair::zero(grid);
    double ea = 0.0;
    if (has_theorem(rep, "T1.5")) {
      try {
        double rho = rho_delta(c.params, rep.constants).rho;
        StatePair init(seed_bump(grid, 0.1), seed_bump(grid, 0.1));
        if (init.h1_norm() >= 0.9 * rho) {
          double sc = 0.5 * rho / init.h1_norm();
          init = StatePair(RadialField(grid, sc * init.u.values()),
                           RadialField(grid, sc * init.v.values()));
        }
        SolveResult lm = minimize_local_ball(c.params, init, rho, c.solver_tol);
        end_a = lm.state;
        ea = lm.energy;
      } catch (const std::exception&) {
      }
    }
    StatePair end_b = default_far_endpoint(c.params, grid, ea - 1.0);
    auto [path, level] = mountain_pass(c.params, end_a, end_b, c.segments, c.solver_tol);
    res.state = path.samples[path.max_index];
    res.energy = level;
    res.gradient_norm = grad_L(res.state, c.params).norm;
    res.classification = "mountain_pass";
    res.converged = true;
    res.u_min_interior = res.state.u.values().minCoeff();
    res.v_min_interior = res.state.v.values().minCoeff();
  } else {
    throw ConfigError("unknown pipeline '" + c.pipeline + "'");
  }

  json out = to_json(res);
  out["certificate"] = to_json(residual_certificate(res, c.params));
  if (gated) out["note"] = "hypotheses unmet (forced run): " + gate_note;
  std::cout << out.dump(2) << '\n';
  std::cout << "# trace\n" << trace_to_csv(res.trace);
  return 0;
}

struct Axis {
  double ParameterSet::*field;
  std::string name;
  std::vector<double> values;
};

Axis parse_axis(const std::string& spec) {
  // name:start:stop:count
  std::map<std::string, double ParameterSet::*> fields = {
      {"lambda1", &ParameterSet::lambda1}, {"mu1", &ParameterSet::mu1},
      {"theta1", &ParameterSet::theta1},   {"lambda2", &ParameterSet::lambda2},
      {"mu2", &ParameterSet::mu2},         {"theta2", &ParameterSet::theta2},
      {"beta", &ParameterSet::beta},       {"radius", &ParameterSet::radius}};
  std::stringstream ss(spec);
  std::string name, s_start, s_stop, s_count;
  if (!std::getline(ss, name, ':') || !std::getline(ss, s_start, ':') ||
      !std::getline(ss, s_stop, ':') || !std::getline(ss, s_count, ':'))
    throw ConfigError("sweep axis must be name:start:stop:count");
  auto it = fields.find(name);
  if (it == fields.end()) throw ConfigError("unknown sweep axis field '" + name + "'");
  Axis ax;
  ax.field = it->second;
  ax.name = name;
  double start = std::stod(s_start), stop = std::stod(s_stop);
  int count = std::stoi(s_count);
  if (count < 1) throw ConfigError("sweep axis count must be >= 1");
  for (int i = 0; i < count; ++i)
    ax.values.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
  return ax;
}

void sweep_row(std::ostream& os, const ParameterSet& p) {
  try {
    p.validate();
  } catch (const std::exception& e) {
    os << "# skipped row: " << e.what() << '\n';
    return;
  }
  ClassificationReport rep = classify(p);
  auto margin_of = [&](Region r) {
    for (const auto& lbl : rep.regions)
      if (lbl.region == r) return lbl.margin;
    return std::nan("");
  };
  std::string theorems;
  for (const auto& t : rep.applicable_theorems) {
    if (!theorems.empty()) theorems += ';';
    theorems += t.id;
  }
  os << format_double(p.lambda1) << ',' << format_double(p.mu1) << ','
     << format_double(p.theta1) << ',' << format_double(p.lambda2) << ','
     << format_double(p.mu2) << ',' << format_double(p.theta2) << ','
     << format_double(p.beta) << ',' << format_double(p.radius) << ','
     << format_double(rep.beta1) << ',' << format_double(rep.beta2) << ','
     << format_double(rep.Lambda) << ',' << format_double(rep.A_level) << ','
     << format_double(margin_of(Region::A1)) << ','
     << format_double(margin_of(Region::A2)) << ','
     << format_double(margin_of(Region::A3)) << ',' << '"' << theorems << '"'
     << '\n';
}

int cmd_sweep(const RunConfig& c) {
  std::vector<Axis> axes;
  if (!c.sweep_axis1.empty()) axes.push_back(parse_axis(c.sweep_axis1));
  if (!c.sweep_axis2.empty()) axes.push_back(parse_axis(c.sweep_axis2));
  std::cout << "lambda1,mu1,theta1,lambda2,mu2,theta2,beta,radius,"
               "beta1,beta2,Lambda,A_level,A1_margin,A2_margin,A3_margin,theorems\n";
  if (axes.empty()) {
    sweep_row(std::cout, c.params);
    return 0;
  }
  if (axes.size() == 1) {
    for (double x : axes[0].values) {
      ParameterSet p = c.params;
      p.*(axes[0].field) = x;
      sweep_row(std::cout, p);
    }
    return 0;
  }
  for (double x : axes[0].values)
    for (double y : axes[1].values) {
      ParameterSet p = c.params;
      p.*(axes[0].field) = x;
      p.*(axes[1].field) = y;
      sweep_row(std::cout, p);
    }
  return 0;
}

int cmd_bubbles(const RunConfig& c) {
  auto grid = make_grid(c.params.radius, c.n);
  double r_cut = c.params.radius / 4.0;
  std::vector<BubbleIntegrals> rows;
  std::vector<std::string> skipped;
  for (double eps : c.eps_list) {
    if (!(eps > 0.0 && eps < r_cut)) {
      skipped.push_back("eps=" + format_double(eps) +
                        " skipped: needs 0 < eps < r_cut=" + format_double(r_cut));
      continue;
    }
    rows.push_back(bubble_integrals(eps, grid, r_cut));
  }
  std::cout << bubbles_to_csv(rows);
  for (const auto& s : skipped) std::cout << "# " << s << '\n';
  return 0;
}

void print_schema() {
  std::cout <<
      "config keys (flat key=value, '#' comments, [sections] ignored):\n"
      "  lambda1 mu1 theta1 lambda2 mu2 theta2 beta radius   model parameters\n"
      "  beta0_cap_factor   |beta| cap factor for the small-coupling window\n"
      "  n                  interior grid nodes (default 256)\n"
      "  solver_tol projection_tol quad_check_tol\n"
      "  seed restarts segments eps_list (comma separated)\n"
      "  pipeline           local_ball | nehari | mountain_pass\n"
      "  force              run even when hypothesis gates fail\n"
      "  sweep_axis1 sweep_axis2   name:start:stop:count\n"
      "sweep CSV columns: lambda1,mu1,theta1,lambda2,mu2,theta2,beta,radius,"
      "beta1,beta2,Lambda,A_level,A1_margin,A2_margin,A3_margin,theorems\n"
      "bubbles CSV columns: eps,grad2,l4,l2,l2log,bracket_lo,bracket_hi,"
      "grad2_over_S2,l2_ratio\n"
      "trace CSV columns: iteration,energy,gradient_norm\n"
      "exit codes: 0 ok, 2 config error, 3 gate failure, 4 numeric failure\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variational laboratory for a coupled critical system with logarithmic terms"};
  app.require_subcommand(0, 1);
  bool schema = false;
  app.add_flag("--schema", schema, "print config keys and CSV columns");
  std::string config_path;
  auto add = [&](const std::string& name, const std::string& desc) {
    auto* sc = app.add_subcommand(name, desc);
    sc->add_option("config", config_path, "config file")->required();
    return sc;
  };
  auto* sc_classify = add("classify", "evaluate parameter gates and thresholds");
  auto* sc_solve = add("solve", "run a solver pipeline");
  auto* sc_sweep = add("sweep", "CSV sweep of margins over 1-2 axes");
  auto* sc_bubbles = add("bubbles", "bubble integral table");

  CLI11_PARSE(app, argc, argv);
  if (schema) {
    print_schema();
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }
  try {
    RunConfig c = parse_config(config_path);
    if (!sc_sweep->parsed()) c.params.validate();  // sweep validates per row
    if (sc_classify->parsed()) return cmd_classify(c);
    if (sc_solve->parsed()) return cmd_solve(c);
    if (sc_sweep->parsed()) return cmd_sweep(c);
    if (sc_bubbles->parsed()) return cmd_bubbles(c);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const GateError& e) {
    std::cerr << "hypothesis gate failure: " << e.what() << '\n';
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "hypothesis gate failure: " << e.what() << '\n';
    return 3;
  } catch (const numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
