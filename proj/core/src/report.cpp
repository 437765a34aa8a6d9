#include "logcrit/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace logcrit {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {
// store reals as strings so emitted JSON is digit-stable across platforms
json num(double x) { return format_double(x); }
}  // namespace

json to_json(const ParameterSet& p) {
  return json{{"lambda1", num(p.lambda1)}, {"mu1", num(p.mu1)},
              {"theta1", num(p.theta1)},   {"lambda2", num(p.lambda2)},
              {"mu2", num(p.mu2)},         {"theta2", num(p.theta2)},
              {"beta", num(p.beta)},       {"radius", num(p.radius)}};
}

json to_json(const DomainConstants& dc) {
  return json{{"volume", num(dc.volume)},
              {"lambda1_omega", num(dc.lambda1_omega)},
              {"sobolev_S", num(dc.sobolev_S)},
              {"omega4", num(dc.omega4)}};
}

json to_json(const RegionLabel& r) {
  return json{{"region", region_name(r.region)},
              {"component", r.component},
              {"margin", num(r.margin)}};
}

json to_json(const ClassificationReport& rep) {
  json regions = json::array();
  for (const auto& r : rep.regions) regions.push_back(to_json(r));
  json theorems = json::array();
  for (const auto& t : rep.applicable_theorems)
    theorems.push_back(json{{"id", t.id}, {"margin", num(t.margin)}, {"checks", t.checks}});
  return json{{"params", to_json(rep.params)},
              {"constants", to_json(rep.constants)},
              {"regions", regions},
              {"applicable_theorems", theorems},
              {"thresholds",
               json{{"beta1", num(rep.beta1)},
                    {"beta2", num(rep.beta2)},
                    {"Lambda", num(rep.Lambda)},
                    {"k", num(rep.k)},
                    {"l", num(rep.l)},
                    {"A_level", num(rep.A_level)},
                    {"rho", num(rep.rho)},
                    {"delta", num(rep.delta)}}},
              {"notes", rep.notes}};
}

json to_json(const EnergyBreakdown& e) {
  return json{{"gradient_u", num(e.gradient_u)}, {"gradient_v", num(e.gradient_v)},
              {"lambda_u", num(e.lambda_u)},     {"lambda_v", num(e.lambda_v)},
              {"quartic_u", num(e.quartic_u)},   {"quartic_v", num(e.quartic_v)},
              {"coupling", num(e.coupling)},     {"log_u", num(e.log_u)},
              {"log_v", num(e.log_v)},           {"total", num(e.total)}};
}

json to_json(const SolveResult& r, bool include_state) {
  json j{{"classification", r.classification},
         {"energy", num(r.energy)},
         {"gradient_norm", num(r.gradient_norm)},
         {"iterations", r.iterations},
         {"converged", r.converged},
         {"u_min_interior", num(r.u_min_interior)},
         {"v_min_interior", num(r.v_min_interior)}};
  if (include_state) {
    json u = json::array(), v = json::array();
    for (int i = 0; i < r.state.grid().n(); ++i) {
      u.push_back(num(r.state.u.values()[i]));
      v.push_back(num(r.state.v.values()[i]));
    }
    j["u"] = u;
    j["v"] = v;
  }
  return j;
}

json to_json(const ResidualCertificate& c) {
  return json{{"strong_residual_u", num(c.strong_residual_u)},
              {"strong_residual_v", num(c.strong_residual_v)},
              {"u_min_interior", num(c.u_min_interior)},
              {"v_min_interior", num(c.v_min_interior)},
              {"q_certificate", c.q_cert},
              {"quarter_identity_residual", num(c.quarter_identity_residual)},
              {"half_identity_residual", num(c.half_identity_residual)}};
}

json to_json(const NonexistenceVerdict& v) {
  return json{{"theorem", v.theorem},
              {"condition_holds", v.condition_holds},
              {"margin", num(v.margin)},
              {"restarts", v.restarts},
              {"positive_hits", v.positive_hits}};
}

json to_json(const BubbleIntegrals& b) {
  return json{{"eps", num(b.eps)},
              {"grad2", num(b.grad2)},
              {"l4", num(b.l4)},
              {"l2", num(b.l2)},
              {"l2log", num(b.l2log)},
              {"cutoff_inner", num(b.cutoff_inner)},
              {"cutoff_outer", num(b.cutoff_outer)},
              {"bracket_lo", num(b.bracket_lo)},
              {"bracket_hi", num(b.bracket_hi)}};
}

json to_json(const GapReport& g) {
  json rows = json::array();
  for (const auto& r : g.rows)
    rows.push_back(json{{"eps", num(r.eps)},
                        {"s1", num(r.s1)},
                        {"s2", num(r.s2)},
                        {"energy", num(r.energy)},
                        {"ok", r.ok},
                        {"note", r.note}});
  return json{{"rows", rows},
              {"best_energy", num(g.best_energy)},
              {"comparison_level", num(g.comparison_level)},
              {"gap_holds", g.gap_holds},
              {"notes", g.notes}};
}

std::string field_to_csv(const RadialField& f) {
  std::ostringstream os;
  os << "r,value\n";
  for (int i = 0; i < f.grid().n(); ++i)
    os << format_double(f.grid().nodes()[i]) << ',' << format_double(f.values()[i])
       << '\n';
  return os.str();
}

std::string trace_to_csv(const std::vector<TracePoint>& trace) {
  std::ostringstream os;
  os << "iteration,energy,gradient_norm\n";
  for (const auto& t : trace)
    os << t.iteration << ',' << format_double(t.energy) << ','
       << format_double(t.gradient_norm) << '\n';
  return os.str();
}

std::string bubbles_to_csv(const std::vector<BubbleIntegrals>& rows) {
  std::ostringstream os;
  os << "eps,grad2,l4,l2,l2log,bracket_lo,bracket_hi,grad2_over_S2,l2_ratio\n";
  double S2 = 32.0 * 3.14159265358979323846 * 3.14159265358979323846 / 3.0;
  for (const auto& b : rows) {
    double l2_ref = 8.0 * omega4 * b.eps * b.eps * std::abs(std::log(b.eps));
    os << format_double(b.eps) << ',' << format_double(b.grad2) << ','
       << format_double(b.l4) << ',' << format_double(b.l2) << ','
       << format_double(b.l2log) << ',' << format_double(b.bracket_lo) << ','
       << format_double(b.bracket_hi) << ',' << format_double(b.grad2 / S2) << ','
       << format_double(b.l2 / l2_ref) << '\n';
  }
  return os.str();
}

}  // namespace logcrit
