#include "logcrit/solvers.hpp"

#include <Eigen/Sparse>
#include <cmath>
#include <limits>

namespace logcrit {

namespace {

StatePair axpy(const StatePair& s, double alpha, const StatePair& d) {
  return StatePair(
      RadialField(s.u.grid_ptr(), s.u.values() + alpha * d.u.values()),
      RadialField(s.v.grid_ptr(), s.v.values() + alpha * d.v.values()));
}

StatePair scaled(const StatePair& s, double c) {
  return StatePair(RadialField(s.u.grid_ptr(), c * s.u.values()),
                   RadialField(s.v.grid_ptr(), c * s.v.values()));
}

double h1_dist(const StatePair& a, const StatePair& b) {
  return axpy(a, -1.0, b).h1_norm();
}

// nodal derivative of f_u = lambda u+ + mu (u+)^3 + beta (v+)^2 u+ + theta u+ log(u+)^2
double force_deriv(double u, double v, double lambda, double mu, double theta,
                   double beta) {
  if (u <= 0.0) return 0.0;
  double lg = (u > 1e-30) ? std::log(u * u) + 2.0 : 0.0;
  double vp = std::max(v, 0.0);
  return lambda + 3.0 * mu * u * u + beta * vp * vp + theta * lg;
}

// one damped Newton run on the strong-form system; returns true when the
// Riesz gradient norm reaches tol
bool newton_polish(const ParameterSet& p, StatePair& S, double tol,
                   int max_iter = 50) {
  const RadialGrid& g = S.grid();
  const int n = g.n();
  auto grad = grad_L(S, p);
  double rn = grad.norm;
  using Trip = Eigen::Triplet<double>;
  for (int it = 0; it < max_iter && rn > tol; ++it) {
    const Vec& u = S.u.values();
    const Vec& v = S.v.values();
    std::vector<Trip> trips;
    trips.reserve(8 * n);
    auto add_block = [&](int ro, int co, const Vec& d, const Vec& e, bool tridiag) {
      for (int i = 0; i < n; ++i) trips.emplace_back(ro + i, co + i, d[i]);
      if (tridiag)
        for (int i = 0; i + 1 < n; ++i) {
          trips.emplace_back(ro + i, co + i + 1, e[i]);
          trips.emplace_back(ro + i + 1, co + i, e[i]);
        }
    };
    Vec duu(n), dvv(n), duv(n);
    for (int i = 0; i < n; ++i) {
      duu[i] = force_deriv(u[i], v[i], p.lambda1, p.mu1, p.theta1, p.beta);
      dvv[i] = force_deriv(v[i], u[i], p.lambda2, p.mu2, p.theta2, p.beta);
      double up = std::max(u[i], 0.0), vp = std::max(v[i], 0.0);
      duv[i] = 2.0 * p.beta * up * vp;
    }
    Vec m = g.mass();
    add_block(0, 0, g.stiff_diag() - m.cwiseProduct(duu), g.stiff_off(), true);
    add_block(n, n, g.stiff_diag() - m.cwiseProduct(dvv), g.stiff_off(), true);
    add_block(0, n, (-m.cwiseProduct(duv)).eval(), Vec(), false);
    add_block(n, 0, (-m.cwiseProduct(duv)).eval(), Vec(), false);
    Eigen::SparseMatrix<double> J(2 * n, 2 * n);
    J.setFromTriplets(trips.begin(), trips.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(J);
    if (lu.info() != Eigen::Success) return false;
    Vec F(2 * n);
    F.head(n) = grad.dual.ru;
    F.tail(n) = grad.dual.rv;
    Vec dx = lu.solve(-F);
    if (!dx.allFinite()) return false;
    double step = 1.0;
    bool moved = false;
    for (int k = 0; k < 30; ++k) {
      StatePair cand(RadialField(S.u.grid_ptr(), u + step * dx.head(n)),
                     RadialField(S.v.grid_ptr(), v + step * dx.tail(n)));
      auto gc = grad_L(cand, p);
      if (gc.norm < rn) {
        S = cand;
        grad = gc;
        rn = gc.norm;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) return rn <= tol;
  }
  return rn <= tol;
}

struct DescentSetup {
  std::optional<double> ball;  // effective radius rho - tau
  double coarse_tol = 1e-4;    // switch point from descent to Newton
};

SolveResult run_descent(const ParameterSet& p, StatePair S, const SolveOptions& opt,
                        const DescentSetup& ds, const std::string& label) {
  SolveResult res;
  res.classification = label;
  if (ds.ball && S.h1_norm() > *ds.ball) S = scaled(S, *ds.ball / S.h1_norm());
  double E = energy_L(S, p).total;
  double alpha = 0.5;
  double gn = grad_L(S, p).norm;
  int it = 0;
  double target = std::max(opt.tol, opt.newton_polish ? ds.coarse_tol : opt.tol);
  for (; it < opt.max_iter; ++it) {
    auto grad = grad_L(S, p);
    gn = grad.norm;
    if (opt.record_trace) res.trace.push_back({it, E, gn});
    if (gn <= target) break;
    bool accepted = false;
    while (alpha >= 1e-16) {
      StatePair cand = axpy(S, -alpha, grad.riesz);
      if (ds.ball) {
        double nn = cand.h1_norm();
        if (nn > *ds.ball) cand = scaled(cand, *ds.ball / nn);
      }
      double Ec = energy_L(cand, p).total;
      if (Ec < E - 1e-15 * std::abs(E)) {
        S = std::move(cand);
        E = Ec;
        alpha = std::min(alpha * 1.3, 1e6);
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;
  }
  if (opt.newton_polish && gn > opt.tol) {
    StatePair polished = S;
    if (newton_polish(p, polished, opt.tol)) {
      bool ok = !ds.ball || polished.h1_norm() <= *ds.ball * (1.0 + 1e-9);
      if (ok && std::isfinite(energy_L(polished, p).total)) S = std::move(polished);
    }
  }
  auto grad = grad_L(S, p);
  res.state = S;
  res.energy = energy_L(S, p).total;
  res.gradient_norm = grad.norm;
  res.iterations = it;
  res.converged = grad.norm <= opt.tol;
  res.u_min_interior = S.u.values().minCoeff();
  res.v_min_interior = S.v.values().minCoeff();
  if (opt.record_trace) res.trace.push_back({it, res.energy, res.gradient_norm});
  return res;
}

}  // namespace

BallGeometryEstimate rho_delta(const ParameterSet& p, const DomainConstants& dc) {
  BallGeometryEstimate out;
  ParameterSet q = p;
  if (p.beta > 0.0) {
    auto shift = epsilon_shift_search(p, dc);
    if (!shift)
      throw precondition_error("rho_delta: no epsilon shift reaches an A region");
    q = shift->shifted;
    out.epsilon = shift->epsilon;
    out.region_case = shift->label.region;
  } else {
    for (Region a : {Region::A1, Region::A2, Region::A3}) {
      if (a_region_sides(a, q, dc) && a_region_margin(a, q, dc) > 0.0) {
        out.region_case = a;
        break;
      }
    }
    if (out.region_case == Region::None)
      throw precondition_error("rho_delta: parameters lie in no A region");
  }
  double S = dc.sobolev_S;
  double lO = dc.lambda1_omega;
  double mx = q.max_mu();
  switch (out.region_case) {
    case Region::A1:
      out.rho = std::sqrt(std::min(lO - q.lambda1, lO - q.lambda2) / (lO * mx)) * S;
      break;
    case Region::A2:
      out.rho = std::sqrt((lO - q.lambda1) / (lO * mx)) * S;
      break;
    default:
      out.rho = S / std::sqrt(mx);
      break;
  }
  out.delta = 0.25 * a_region_margin(out.region_case, q, dc);
  return out;
}

SolveResult minimize_local_ball(const ParameterSet& p, const StatePair& init,
                                double rho, const SolveOptions& opt) {
  if (rho <= 0.0) throw precondition_error("local ball radius must be positive");
  if (init.h1_norm() >= rho)
    throw precondition_error("local ball init must lie strictly inside B_rho");
  DescentSetup ds;
  ds.ball = rho * 0.99;  // tau = 0.01 rho
  return run_descent(p, init, opt, ds, "local_min_ball");
}

SolveResult minimize_local_ball(const ParameterSet& p, const StatePair& init,
                                double rho, double tol) {
  SolveOptions opt;
  opt.tol = tol;
  return minimize_local_ball(p, init, rho, opt);
}

SolveResult minimize_on_nehari(const ParameterSet& p, const StatePair& init,
                               const SolveOptions& opt) {
  if (!(p.theta1 > 0.0 && p.theta2 > 0.0))
    throw precondition_error("Nehari minimization needs the Sigma1 regime");
  SolveResult res;
  res.classification = "nehari_min";
  StatePair S = project_to_nehari(init, p, 1e-12).projected;
  double E = energy_L(S, p).total;
  double alpha = 0.5;
  double gn = grad_L(S, p).norm;
  int it = 0;
  double target = std::max(opt.tol, opt.newton_polish ? 1e-3 : opt.tol);
  for (; it < opt.max_iter; ++it) {
    auto grad = grad_L(S, p);
    gn = grad.norm;
    if (opt.record_trace) res.trace.push_back({it, E, gn});
    if (gn <= target) break;
    bool accepted = false;
    while (alpha >= 1e-16) {
      bool ok = true;
      StatePair cand = S;
      try {
        cand = project_to_nehari(axpy(S, -alpha, grad.riesz), p, 1e-12).projected;
      } catch (const std::exception&) {
        ok = false;
      }
      if (ok) {
        double Ec = energy_L(cand, p).total;
        if (Ec < E - 1e-15 * std::abs(E)) {
          S = std::move(cand);
          E = Ec;
          alpha = std::min(alpha * 1.3, 1e6);
          accepted = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!accepted) break;
  }
  if (opt.newton_polish && gn > opt.tol) {
    StatePair polished = S;
    if (newton_polish(p, polished, opt.tol) &&
        std::isfinite(energy_L(polished, p).total) &&
        polished.u.values().cwiseMax(0.0).maxCoeff() > 0.0 &&
        polished.v.values().cwiseMax(0.0).maxCoeff() > 0.0)
      S = std::move(polished);
  }
  // a free critical point sits on the Nehari set; reproject only if needed
  auto [g1, g2] = nehari_residuals(S, p);
  if (std::abs(g1) + std::abs(g2) > 1e-10)
    S = project_to_nehari(S, p, 1e-12).projected;
  auto grad = grad_L(S, p);
  res.state = S;
  res.energy = energy_L(S, p).total;
  res.gradient_norm = grad.norm;
  res.iterations = it;
  res.converged = grad.norm <= opt.tol;
  res.u_min_interior = S.u.values().minCoeff();
  res.v_min_interior = S.v.values().minCoeff();
  return res;
}

SolveResult minimize_on_nehari(const ParameterSet& p, const StatePair& init,
                               double tol) {
  SolveOptions opt;
  opt.tol = tol;
  return minimize_on_nehari(p, init, opt);
}

namespace {

PathState reparametrize(const PathState& path) {
  const int m = static_cast<int>(path.samples.size());
  Vec cum = Vec::Zero(m);
  for (int i = 1; i < m; ++i) {
    double d = h1_dist(path.samples[i], path.samples[i - 1]);
    if (d < 1e-12) throw numeric_error("mountain pass: path collapse");
    cum[i] = cum[i - 1] + d;
  }
  PathState out;
  out.samples.reserve(m);
  out.samples.push_back(path.samples.front());
  int seg = 1;
  for (int i = 1; i < m - 1; ++i) {
    double target = cum[m - 1] * i / (m - 1);
    while (seg < m - 1 && cum[seg] < target) ++seg;
    double w = (target - cum[seg - 1]) / (cum[seg] - cum[seg - 1]);
    out.samples.push_back(
        axpy(scaled(path.samples[seg - 1], 1.0 - w), w, path.samples[seg]));
  }
  out.samples.push_back(path.samples.back());
  return out;
}

void score(PathState& path, const ParameterSet& p) {
  path.max_energy = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(path.samples.size()); ++i) {
    double e = energy_L(path.samples[i], p).total;
    if (!std::isfinite(e)) {
      // poison the whole path so the sweep gets rejected
      path.max_energy = std::numeric_limits<double>::infinity();
      path.max_index = i;
      return;
    }
    if (e > path.max_energy) {
      path.max_energy = e;
      path.max_index = i;
    }
  }
}

}  // namespace

std::pair<PathState, double> mountain_pass(const ParameterSet& p,
                                           const StatePair& end_a,
                                           const StatePair& end_b, int segments,
                                           double tol, int max_sweeps) {
  if (segments < 4) throw precondition_error("mountain pass needs at least 4 segments");
  double Ea = energy_L(end_a, p).total;
  double Eb = energy_L(end_b, p).total;
  if (!(Eb < Ea))
    throw precondition_error("mountain pass: far endpoint must have lower energy");

  PathState path;
  path.samples.reserve(segments + 1);
  for (int i = 0; i <= segments; ++i) {
    double w = static_cast<double>(i) / segments;
    path.samples.push_back(axpy(scaled(end_a, 1.0 - w), w, end_b));
  }
  score(path, p);

  // samples already below both endpoint energies cannot carry the path
  // maximum; freezing them keeps the string from running away down the
  // unbounded valley and starving the barrier of resolution
  double floor_energy = std::min(Ea, Eb);
  double path_scale = std::max(1.0, h1_dist(end_a, end_b));

  double alpha = 0.25;
  int stalled = 0;
  for (int sweep = 0; sweep < max_sweeps && alpha >= 1e-12; ++sweep) {
    PathState cand = path;
    try {
      for (int i = 1; i < segments; ++i) {
        if (energy_L(cand.samples[i], p).total <= floor_energy) continue;
        auto grad = grad_L(cand.samples[i], p);
        double step = alpha;
        // trust region: no single move longer than one nominal segment
        double cap = path_scale / segments;
        if (step * grad.norm > cap) step = cap / grad.norm;
        cand.samples[i] = axpy(cand.samples[i], -step, grad.riesz);
      }
      cand = reparametrize(cand);
      score(cand, p);
    } catch (const numeric_error&) {
      // overflow along an overshooting step: retry shorter
      alpha *= 0.5;
      continue;
    } catch (const domain_error&) {
      alpha *= 0.5;
      continue;
    }
    if (!std::isfinite(cand.max_energy)) {
      alpha *= 0.5;
      continue;
    }
    if (cand.max_energy <= path.max_energy + 1e-13 * (1.0 + std::abs(path.max_energy))) {
      double gain = path.max_energy - cand.max_energy;
      path = std::move(cand);
      alpha = std::min(alpha * 1.1, 10.0);
      stalled = (gain < tol * (1.0 + std::abs(path.max_energy))) ? stalled + 1 : 0;
      if (stalled >= 8) break;
    } else {
      alpha *= 0.5;
    }
  }
  return {path, path.max_energy};
}

SolveResult solve_single(double lambda, double mu, double theta, SingleMode mode,
                         const RadialField& init, double tol) {
  auto grid = init.grid_ptr();
  ParameterSet p;
  p.lambda1 = lambda;
  p.mu1 = mu;
  p.theta1 = theta;
  p.lambda2 = 0.0;
  p.mu2 = 1.0;
  p.theta2 = 1.0;
  p.beta = 1e-300;  // coupling is inert with v identically zero
  p.radius = grid->radius();
  DomainConstants dc = ball_geometry(p.radius);
  StatePair S0(init, RadialField(grid));
  SolveOptions opt;
  opt.tol = tol;

  if (mode == SingleMode::local_min) {
    if (theta >= 0.0)
      throw precondition_error("single local_min requires theta < 0");
    double S = dc.sobolev_S, lO = dc.lambda1_omega;
    double rho;
    bool sigma3 = lambda >= 0.0 && lambda < lO &&
                  (lO - lambda) * (lO - lambda) / (lO * lO * mu) * S * S +
                          2.0 * theta * dc.volume >
                      0.0;
    bool sigma4 = S * S / mu + 2.0 * theta * std::exp(-lambda / theta) * dc.volume > 0.0;
    if (sigma3)
      rho = std::sqrt((lO - lambda) / (lO * mu)) * S;
    else if (sigma4)
      rho = S / std::sqrt(mu);
    else
      throw precondition_error("single local_min: parameters outside Sigma3 and Sigma4");
    DescentSetup ds;
    ds.ball = rho * 0.99;
    if (S0.h1_norm() >= rho) throw precondition_error("single local_min: init outside B_rho");
    SolveResult r = run_descent(p, S0, opt, ds, "single local_min");
    return r;
  }

  if (mode == SingleMode::nehari_min) {
    if (theta <= 0.0)
      throw precondition_error("single nehari_min requires theta > 0");
    SolveResult res;
    res.classification = "single nehari_min";
    RadialField u = project_single(init, lambda, mu, theta, 1e-12).projected;
    double E = energy_J(u, lambda, mu, theta);
    double alpha = 0.5;
    StatePair S(u, RadialField(grid));
    double gn = grad_L(S, p).norm;
    int it = 0;
    double target = std::max(tol, 1e-3);
    for (; it < opt.max_iter; ++it) {
      auto grad = grad_L(S, p);
      gn = grad.norm;
      res.trace.push_back({it, E, gn});
      if (gn <= target) break;
      bool accepted = false;
      while (alpha >= 1e-16) {
        bool ok = true;
        RadialField cand = S.u;
        try {
          RadialField moved(grid, S.u.values() - alpha * grad.riesz.u.values());
          cand = project_single(moved, lambda, mu, theta, 1e-12).projected;
        } catch (const std::exception&) {
          ok = false;
        }
        if (ok) {
          double Ec = energy_J(cand, lambda, mu, theta);
          if (Ec < E - 1e-15 * std::abs(E)) {
            S = StatePair(cand, RadialField(grid));
            E = Ec;
            alpha = std::min(alpha * 1.3, 1e6);
            accepted = true;
            break;
          }
        }
        alpha *= 0.5;
      }
      if (!accepted) break;
    }
    if (gn > tol) {
      StatePair polished = S;
      if (newton_polish(p, polished, tol) &&
          polished.u.values().cwiseMax(0.0).maxCoeff() > 0.0)
        S = polished;
    }
    auto [g1, g2] = nehari_residuals(S, p);
    (void)g2;
    if (std::abs(g1) > 1e-10)
      S = StatePair(project_single(S.u, lambda, mu, theta, 1e-12).projected,
                    RadialField(grid));
    auto grad = grad_L(S, p);
    res.state = S;
    res.energy = energy_J(S.u, lambda, mu, theta);
    res.gradient_norm = grad.norm;
    res.iterations = it;
    res.converged = grad.norm <= tol;
    res.u_min_interior = S.u.values().minCoeff();
    res.v_min_interior = 0.0;
    return res;
  }

  // single-field mountain pass between the zero state and a far negative state
  StatePair zero = StatePair::zero(grid);
  auto e1 = principal_eigenpair(grid);
  double t = 1.0;
  StatePair far(RadialField(grid, t * e1.mode.values()), RadialField(grid));
  for (int k = 0; k < 200 && energy_L(far, p).total >= 0.0; ++k) {
    t *= 2.0;
    far = StatePair(RadialField(grid, t * e1.mode.values()), RadialField(grid));
  }
  auto [pathstate, level] = mountain_pass(p, zero, far, 24, tol);
  SolveResult res;
  res.classification = "single mountain_pass";
  res.state = pathstate.samples[pathstate.max_index];
  res.energy = level;
  res.gradient_norm = grad_L(res.state, p).norm;
  res.converged = true;
  res.u_min_interior = res.state.u.values().minCoeff();
  res.v_min_interior = 0.0;
  return res;
}

double strong_residual_norm(const RadialGrid& g, const Vec& dual, const Vec& u) {
  // pointwise strong residual is dual / mass; take its weighted L2 norm
  double acc = 0.0;
  for (int i = 0; i < g.n(); ++i) acc += dual[i] * dual[i] / g.mass()[i];
  double denom = std::sqrt(u.dot(g.apply_stiffness(u)));
  if (denom == 0.0) return std::sqrt(acc);
  return std::sqrt(acc) / denom;
}

ResidualCertificate residual_certificate(const SolveResult& r, const ParameterSet& p) {
  ResidualCertificate c;
  const RadialGrid& g = r.state.grid();
  WeakResidual w = weak_residual(r.state, p);
  c.strong_residual_u = strong_residual_norm(g, w.ru, r.state.u.values());
  c.strong_residual_v = strong_residual_norm(g, w.rv, r.state.v.values());
  c.u_min_interior = r.state.u.values().minCoeff();
  c.v_min_interior = r.state.v.values().minCoeff();
  c.q_cert = q_certificate(r.state, p);
  auto [l23, r23] = quarter_slope_identity(r.state, p);
  auto [l1, r1] = half_slope_identity(r.state, p);
  c.quarter_identity_residual = std::abs(l23 - r23) / (1.0 + std::abs(l23));
  c.half_identity_residual = std::abs(l1 - r1) / (1.0 + std::abs(l1));
  return c;
}

std::pair<double, double> quarter_slope_identity(const StatePair& s, const ParameterSet& p) {
  double L = energy_L(s, p).total;
  auto [g1, g2] = nehari_residuals(s, p);
  double lhs = L - 0.25 * (g1 + g2);
  StateIntegrals I = state_integrals(s);
  // int (u+)^2 log(e^{lambda/theta}(u+)^2) expands to (lambda/theta) l2 + logm
  double rhs = 0.25 * I.grad2_u - 0.25 * (p.theta1 * I.logm_u + p.lambda1 * I.l2_u) +
               0.5 * p.theta1 * I.l2_u + 0.25 * I.grad2_v -
               0.25 * (p.theta2 * I.logm_v + p.lambda2 * I.l2_v) +
               0.5 * p.theta2 * I.l2_v;
  return {lhs, rhs};
}

std::pair<double, double> half_slope_identity(const StatePair& s, const ParameterSet& p) {
  double L = energy_L(s, p).total;
  auto [g1, g2] = nehari_residuals(s, p);
  double lhs = L - 0.5 * (g1 + g2);
  StateIntegrals I = state_integrals(s);
  double rhs = 0.25 * (p.mu1 * I.l4_u + p.mu2 * I.l4_v + 2.0 * p.beta * I.cross) +
               0.5 * p.theta1 * I.l2_u + 0.5 * p.theta2 * I.l2_v;
  return {lhs, rhs};
}

std::pair<double, double> coercivity_gap(const StatePair& s, const ParameterSet& p,
                                         const DomainConstants& dc) {
  double L = energy_L(s, p).total;
  auto [g1, g2] = nehari_residuals(s, p);
  double lhs = L - 0.25 * (g1 + g2);
  StateIntegrals I = state_integrals(s);
  double rhs = 0.25 * (I.grad2_u + I.grad2_v) +
               0.25 * p.theta1 * std::exp(1.0 - p.lambda1 / p.theta1) * dc.volume +
               0.25 * p.theta2 * std::exp(1.0 - p.lambda2 / p.theta2) * dc.volume;
  return {lhs, rhs};
}

CkLowerBounds ck_lower_bounds(const StatePair& s, const ParameterSet& p,
                              const DomainConstants& dc) {
  CkLowerBounds out;
  StateIntegrals I = state_integrals(s);
  double sq = std::sqrt(dc.volume);
  double l4u2 = std::sqrt(I.l4_u), l4v2 = std::sqrt(I.l4_v);
  if (2.0 * std::min(p.theta1, p.theta2) >= -dc.lambda1_omega &&
      p.theta1 < 0.0 && p.theta2 < 0.0)
    out.case_theta = 0.25 * p.theta1 * std::exp(-p.lambda1 / p.theta1 - 1.0) * dc.volume +
                     0.25 * p.theta2 * std::exp(-p.lambda2 / p.theta2 - 1.0) * dc.volume;
  if (p.beta > 0.0)
    out.case_beta_pos = 0.25 * (p.mu1 * I.l4_u + p.mu2 * I.l4_v) +
                        0.5 * p.theta1 * sq * l4u2 + 0.5 * p.theta2 * sq * l4v2;
  if (p.beta < 0.0 && p.beta > -std::sqrt(p.mu1 * p.mu2))
    out.case_beta_window =
        0.25 * ((p.mu1 + p.beta * std::sqrt(p.mu1 / p.mu2)) * I.l4_u +
                (p.mu2 + p.beta * std::sqrt(p.mu2 / p.mu1)) * I.l4_v) +
        0.5 * p.theta1 * sq * l4u2 + 0.5 * p.theta2 * sq * l4v2;
  return out;
}

bool escape_probe(const SolveResult& r, const ParameterSet& p) {
  const StatePair& S = r.state;
  double umax = S.u.values().cwiseAbs().maxCoeff();
  double vmax = S.v.values().cwiseAbs().maxCoeff();
  bool u_trivial = umax < 1e-8, v_trivial = vmax < 1e-8;
  if (!u_trivial && !v_trivial) return false;
  RadialField bump = seed_bump(S.grid_ptr(), 1.0);
  double E = energy_L(S, p).total;
  for (double t = 1e-2; t >= 1e-8; t *= 0.1) {
    StatePair probe = S;
    if (u_trivial)
      probe = StatePair(RadialField(S.u.grid_ptr(), S.u.values() + t * bump.values()), S.v);
    else
      probe = StatePair(S.u, RadialField(S.v.grid_ptr(), S.v.values() + t * bump.values()));
    if (energy_L(probe, p).total < E) return true;
  }
  return false;
}

RadialField seed_bump(std::shared_ptr<const RadialGrid> grid, double amplitude) {
  Vec vals(grid->n());
  double R = grid->radius();
  for (int i = 0; i < grid->n(); ++i) {
    double r = grid->nodes()[i];
    vals[i] = amplitude * (1.0 - (r / R) * (r / R));
  }
  return RadialField(std::move(grid), std::move(vals));
}

StatePair default_far_endpoint(const ParameterSet& p,
                               std::shared_ptr<const RadialGrid> grid,
                               double below) {
  auto e1 = principal_eigenpair(grid);
  double t = 1.0;
  for (int k = 0; k < 400; ++k) {
    StatePair s(RadialField(grid, t * e1.mode.values()),
                RadialField(grid, t * e1.mode.values()));
    if (energy_L(s, p).total < below) return s;
    t *= 2.0;
  }
  throw numeric_error("no far endpoint with energy below the requested level");
}

}  // namespace logcrit
