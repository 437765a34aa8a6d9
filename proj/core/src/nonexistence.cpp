#include "logcrit/nonexistence.hpp"

#include <cmath>
#include <random>

namespace logcrit {

double g_t(double lambda, double mu, double theta, double t) {
  return mu * t + theta * std::log(t) + lambda;
}

double g_t_min(double lambda, double mu, double theta) {
  // minimum of g at t = -theta/mu (theta < 0)
  return std::abs(theta) + theta * std::log(std::abs(theta)) -
         theta * std::log(mu) + lambda;
}

double g_st(const ParameterSet& p, double s, double t) {
  return (p.mu2 - p.beta) * s - (p.mu1 - p.beta) * t + p.theta2 * std::log(s) -
         p.theta1 * std::log(t);
}

double g_st_min(const ParameterSet& p) {
  double s_star = p.theta2 / (p.beta - p.mu2);
  double t_star = p.theta1 / (p.beta - p.mu1);
  return g_st(p, s_star, t_star);
}

NonexistenceVerdict theorem16_condition(double lambda, double mu, double theta,
                                        const DomainConstants& dc) {
  if (theta >= 0.0) throw precondition_error("theorem16 condition needs theta < 0");
  if (mu <= 0.0) throw precondition_error("theorem16 condition needs mu > 0");
  NonexistenceVerdict v;
  v.theorem = "T16";
  v.margin = g_t_min(lambda, mu, theta) - dc.lambda1_omega;
  v.condition_holds = v.margin >= 0.0;
  return v;
}

NonexistenceVerdict theorem17_condition(const ParameterSet& p) {
  if (!(p.mu1 < p.mu2)) throw precondition_error("theorem17 needs mu1 < mu2");
  if (!(p.mu1 < p.beta && p.beta < p.mu2))
    throw precondition_error("theorem17 needs mu1 < beta < mu2");
  if (!(p.theta2 < 0.0 && 0.0 < p.theta1))
    throw precondition_error("theorem17 needs theta2 < 0 < theta1");
  NonexistenceVerdict v;
  v.theorem = "T17";
  v.margin = g_st_min(p) + p.lambda2 - p.lambda1;
  v.condition_holds = v.margin > 0.0;
  return v;
}

namespace {

RadialField random_bump(std::shared_ptr<const RadialGrid> grid,
                        std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(0.1, 2.0);
  std::uniform_int_distribution<int> freq(1, 4);
  std::uniform_real_distribution<double> mix(0.0, 0.5);
  double a = amp(rng), m = mix(rng);
  int k = freq(rng);
  double R = grid->radius();
  Vec vals(grid->n());
  for (int i = 0; i < grid->n(); ++i) {
    double r = grid->nodes()[i];
    double base = 1.0 - (r / R) * (r / R);
    vals[i] = a * base * (1.0 + m * std::sin(k * 3.14159265358979323846 * r / R));
  }
  return RadialField(std::move(grid), std::move(vals));
}

}  // namespace

BatteryReport falsification_battery(const ParameterSet& p, int restarts,
                                    unsigned seed, int grid_n,
                                    double positivity_threshold) {
  BatteryReport rep;
  DomainConstants dc = ball_geometry(p.radius);

  // attach whichever closed-form verdict applies (possibly non-holding)
  bool have = false;
  try {
    rep.verdict = theorem17_condition(p);
    have = true;
  } catch (const precondition_error&) {
  }
  if (!have) {
    NonexistenceVerdict best;
    bool any = false;
    for (auto [la, mu, th] : {std::tuple{p.lambda1, p.mu1, p.theta1},
                              std::tuple{p.lambda2, p.mu2, p.theta2}}) {
      try {
        auto v = theorem16_condition(la, mu, th, dc);
        if (!any || v.margin > best.margin) best = v;
        any = true;
      } catch (const precondition_error&) {
      }
    }
    if (any) rep.verdict = best;
  }

  if (restarts <= 0) return rep;
  auto grid = make_grid(p.radius, grid_n);
  double rho_probe;
  try {
    rho_probe = rho_delta(p, dc).rho;
  } catch (const std::exception&) {
    rho_probe = dc.sobolev_S / std::sqrt(p.max_mu());
  }

  std::mt19937_64 rng(seed);
  SolveOptions opt;
  opt.tol = 1e-6;
  opt.max_iter = 800;
  opt.record_trace = false;
  for (int r = 0; r < restarts; ++r) {
    StatePair init(random_bump(grid, rng), random_bump(grid, rng));
    double nn = init.h1_norm();
    if (nn >= 0.9 * rho_probe)
      init = StatePair(RadialField(grid, 0.9 * rho_probe / nn * init.u.values()),
                       RadialField(grid, 0.9 * rho_probe / nn * init.v.values()));
    SolveResult res;
    if (r % 2 == 0) {
      res = minimize_local_ball(p, init, rho_probe, opt);
    } else {
      // mountain-pass probe: deform a short path, then descend from its peak
      try {
        StatePair far = default_far_endpoint(p, grid, -1.0);
        auto [path, level] = mountain_pass(p, StatePair::zero(grid), far, 12, 1e-4, 60);
        (void)level;
        StatePair peak = path.samples[path.max_index];
        double pn = peak.h1_norm();
        if (pn >= 0.99 * rho_probe)
          peak = StatePair(
              RadialField(grid, 0.9 * rho_probe / pn * peak.u.values()),
              RadialField(grid, 0.9 * rho_probe / pn * peak.v.values()));
        res = minimize_local_ball(p, peak, rho_probe, opt);
      } catch (const std::exception&) {
        res = minimize_local_ball(p, init, rho_probe, opt);
      }
    }
    rep.restarts++;
    if (res.converged && res.u_min_interior > positivity_threshold &&
        res.v_min_interior > positivity_threshold) {
      rep.positive_hits++;
      rep.hits.push_back(res);
    }
  }
  rep.verdict.restarts = rep.restarts;
  rep.verdict.positive_hits = rep.positive_hits;
  return rep;
}

}  // namespace logcrit
