#include "logcrit/bubbles.hpp"

#include <cmath>
#include <limits>

namespace logcrit {

RadialField bubble_field(double eps, std::shared_ptr<const RadialGrid> grid,
                         double r_cut) {
  if (!(eps > 0.0 && eps < r_cut))
    throw domain_error("bubble needs 0 < eps < r_cut");
  if (2.0 * r_cut > grid->radius())
    throw domain_error("bubble cutoff support exceeds the grid radius");
  Vec vals(grid->n());
  for (int i = 0; i < grid->n(); ++i) {
    double r = grid->nodes()[i];
    double U = 2.0 * std::sqrt(2.0) * eps / (eps * eps + r * r);
    double xi;
    if (r <= r_cut) {
      xi = 1.0;
    } else if (r >= 2.0 * r_cut) {
      xi = 0.0;
    } else {
      double s = (r - r_cut) / r_cut;
      xi = 1.0 - (10.0 * s * s * s - 15.0 * s * s * s * s + 6.0 * std::pow(s, 5));
    }
    vals[i] = xi * U;
  }
  return RadialField(std::move(grid), std::move(vals));
}

BubbleIntegrals bubble_integrals(double eps,
                                 std::shared_ptr<const RadialGrid> grid,
                                 double r_cut) {
  RadialField v = bubble_field(eps, grid, r_cut);
  BubbleIntegrals out;
  out.eps = eps;
  out.cutoff_inner = r_cut;
  out.cutoff_outer = 2.0 * r_cut;
  out.grad2 = dirichlet_energy(v);
  out.l4 = integrate_power(v, 4.0);
  out.l2 = integrate_power(v, 2.0);
  out.l2log = log_moment(v);
  double Rc = r_cut, e2 = eps * eps, li = std::log(1.0 / eps);
  out.bracket_lo = 8.0 *
                   std::log(8.0 * (e2 + Rc * Rc) /
                            (std::exp(1.0) * std::pow(e2 + 4.0 * Rc * Rc, 2))) *
                   omega4 * e2 * li;
  out.bracket_hi = 8.0 *
                   std::log(8.0 * std::exp(1.0) * (e2 + 4.0 * Rc * Rc) /
                            std::pow(e2 + Rc * Rc, 2)) *
                   omega4 * e2 * li;
  return out;
}

double ray_max(const StatePair& s, const ParameterSet& p, double* arg_t) {
  StateIntegrals I = state_integrals(s);
  auto E = [&](double t) {
    double t2 = t * t, t4 = t2 * t2;
    double quad = 0.5 * (I.grad2_u + I.grad2_v) -
                  0.5 * (p.lambda1 * I.l2_u + p.lambda2 * I.l2_v);
    double quart = 0.25 * (p.mu1 * I.l4_u + p.mu2 * I.l4_v + 2.0 * p.beta * I.cross);
    double lt = std::log(t2);
    double log1 = 0.5 * p.theta1 * (I.logm_u + (lt - 1.0) * I.l2_u);
    double log2 = 0.5 * p.theta2 * (I.logm_v + (lt - 1.0) * I.l2_v);
    return t2 * quad - t4 * quart - t2 * (log1 + log2);
  };
  double best = -std::numeric_limits<double>::infinity(), best_x = 0.0;
  for (int i = 0; i <= 600; ++i) {
    double x = -3.0 * std::log(10.0) + i * (6.0 * std::log(10.0) / 600.0);
    double e = E(std::exp(x));
    if (e > best) { best = e; best_x = x; }
  }
  double step = 6.0 * std::log(10.0) / 600.0;
  double lo = best_x - step, hi = best_x + step;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = E(std::exp(x1)), f2 = E(std::exp(x2));
  while (hi - lo > 1e-13) {
    if (f1 < f2) {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo); f2 = E(std::exp(x2));
    } else {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo); f1 = E(std::exp(x1));
    }
  }
  double x = 0.5 * (lo + hi);
  if (arg_t) *arg_t = std::exp(x);
  return std::max(best, E(std::exp(x)));
}

GapReport gap_report_semitrivial(const ParameterSet& p, const std::vector<double>& eps_list,
                            const RadialField& u_single, double c_theta1) {
  GapReport rep;
  auto grid = u_single.grid_ptr();
  double r_cut = grid->radius() / 4.0;
  double S2 = ball_geometry(p.radius).sobolev_S * ball_geometry(p.radius).sobolev_S;
  rep.comparison_level = std::min(c_theta1 + 0.25 * S2 / p.mu2,
                                  0.25 * (1.0 / p.mu1 + 1.0 / p.mu2) * S2);
  rep.best_energy = std::numeric_limits<double>::infinity();
  for (double eps : eps_list) {
    GapRow row;
    row.eps = eps;
    try {
      RadialField veps = bubble_field(eps, grid, r_cut);
      auto proj = project_to_nehari(StatePair(u_single, veps), p, 1e-12);
      row.s1 = proj.t1;
      row.s2 = proj.t2;
      row.energy = energy_L(proj.projected, p).total;
      row.ok = true;
      rep.best_energy = std::min(rep.best_energy, row.energy);
    } catch (const std::exception& e) {
      row.note = e.what();
    }
    rep.rows.push_back(row);
  }
  rep.gap_holds = rep.best_energy < rep.comparison_level;
  return rep;
}

GapReport gap_report_bubble_ray(const ParameterSet& p, const std::vector<double>& eps_list,
                            std::shared_ptr<const RadialGrid> grid) {
  GapReport rep;
  DomainConstants dc = ball_geometry(p.radius);
  auto [k, l] = solve_kl(p.mu1, p.mu2, p.beta);
  if (k <= 0.0 || l <= 0.0)
    throw precondition_error("bubble pair needs positive (k,l)");
  rep.comparison_level = limit_level_A(p, dc);
  rep.best_energy = std::numeric_limits<double>::infinity();
  double r_cut = grid->radius() / 4.0;
  for (double eps : eps_list) {
    GapRow row;
    row.eps = eps;
    try {
      RadialField veps = bubble_field(eps, grid, r_cut);
      StatePair ray(RadialField(grid, std::sqrt(k) * veps.values()),
                    RadialField(grid, std::sqrt(l) * veps.values()));
      double t = 1.0;
      row.energy = ray_max(ray, p, &t);
      row.s1 = row.s2 = t;
      row.ok = true;
      rep.best_energy = std::min(rep.best_energy, row.energy);
    } catch (const std::exception& e) {
      row.note = e.what();
    }
    rep.rows.push_back(row);
  }
  rep.gap_holds = rep.best_energy < rep.comparison_level;
  if (p.theta1 > 0.0 && p.theta2 > 0.0) {
    try {
      double b2 = beta2_threshold(p);
      if (p.beta > b2) {
        double L = lambda_cap(p);
        rep.notes.push_back(L > k + l ? "Lambda > k+l holds"
                                      : "Lambda > k+l FAILS");
      }
    } catch (const std::exception&) {
    }
  }
  return rep;
}

}  // namespace logcrit
