#include "logcrit/functionals.hpp"

#include <cmath>

namespace logcrit {

namespace {

Vec positive_part(const Vec& x) { return x.cwiseMax(0.0); }

// nodal samples of (s+)^2 log (s+)^2 with the continuous extension by 0
Vec sq_log_sq(const Vec& x) {
  Vec out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double s = x[i];
    out[i] = (s > 1e-150) ? s * s * std::log(s * s) : 0.0;
  }
  return out;
}

// nodal samples of s+ * log (s+)^2, extended by 0 at s <= 0
Vec plog_sq(const Vec& x) {
  Vec out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double s = x[i];
    out[i] = (s > 1e-150) ? s * std::log(s * s) : 0.0;
  }
  return out;
}

}  // namespace

StatePair::StatePair(RadialField u_, RadialField v_) : u(std::move(u_)), v(std::move(v_)) {
  if (u.grid_ptr() != v.grid_ptr() &&
      (u.grid().n() != v.grid().n() || u.grid().radius() != v.grid().radius()))
    throw domain_error("state components live on different grids");
}

double StatePair::h1_norm() const {
  return std::sqrt(dirichlet_energy(u) + dirichlet_energy(v));
}

StatePair StatePair::zero(std::shared_ptr<const RadialGrid> grid) {
  return StatePair(RadialField(grid), RadialField(grid));
}

StateIntegrals state_integrals(const StatePair& s) {
  const RadialGrid& g = s.grid();
  Vec up = positive_part(s.u.values());
  Vec vp = positive_part(s.v.values());
  StateIntegrals out;
  out.grad2_u = dirichlet_energy(s.u);
  out.grad2_v = dirichlet_energy(s.v);
  out.l2_u = integrate_nodal(g, up.cwiseProduct(up));
  out.l2_v = integrate_nodal(g, vp.cwiseProduct(vp));
  out.l4_u = integrate_nodal(g, up.array().pow(4).matrix());
  out.l4_v = integrate_nodal(g, vp.array().pow(4).matrix());
  out.cross = integrate_nodal(g, up.cwiseProduct(up).cwiseProduct(vp.cwiseProduct(vp)));
  out.logm_u = integrate_nodal(g, sq_log_sq(up));
  out.logm_v = integrate_nodal(g, sq_log_sq(vp));
  return out;
}

EnergyBreakdown energy_L(const StatePair& s, const ParameterSet& p) {
  if (std::abs(s.grid().radius() - p.radius) > 1e-12 * p.radius)
    throw domain_error("state grid radius does not match parameter radius");
  StateIntegrals I = state_integrals(s);
  EnergyBreakdown b;
  b.gradient_u = 0.5 * I.grad2_u;
  b.gradient_v = 0.5 * I.grad2_v;
  b.lambda_u = -0.5 * p.lambda1 * I.l2_u;
  b.lambda_v = -0.5 * p.lambda2 * I.l2_v;
  b.quartic_u = -0.25 * p.mu1 * I.l4_u;
  b.quartic_v = -0.25 * p.mu2 * I.l4_v;
  b.coupling = -0.5 * p.beta * I.cross;
  b.log_u = -0.5 * p.theta1 * (I.logm_u - I.l2_u);
  b.log_v = -0.5 * p.theta2 * (I.logm_v - I.l2_v);
  b.total = b.gradient_u + b.gradient_v + b.lambda_u + b.lambda_v + b.quartic_u +
            b.quartic_v + b.coupling + b.log_u + b.log_v;
  return b;
}

WeakResidual weak_residual(const StatePair& s, const ParameterSet& p) {
  const RadialGrid& g = s.grid();
  Vec up = positive_part(s.u.values());
  Vec vp = positive_part(s.v.values());
  Vec up2 = up.cwiseProduct(up);
  Vec vp2 = vp.cwiseProduct(vp);
  Vec fu = p.lambda1 * up + p.mu1 * up.cwiseProduct(up2) +
           p.beta * vp2.cwiseProduct(up) + p.theta1 * plog_sq(up);
  Vec fv = p.lambda2 * vp + p.mu2 * vp.cwiseProduct(vp2) +
           p.beta * up2.cwiseProduct(vp) + p.theta2 * plog_sq(vp);
  WeakResidual r;
  r.ru = g.apply_stiffness(s.u.values()) - g.mass().cwiseProduct(fu);
  r.rv = g.apply_stiffness(s.v.values()) - g.mass().cwiseProduct(fv);
  return r;
}

Gradient grad_L(const StatePair& s, const ParameterSet& p) {
  const RadialGrid& g = s.grid();
  Gradient out;
  out.dual = weak_residual(s, p);
  Vec gu = g.solve_stiffness(out.dual.ru);
  Vec gv = g.solve_stiffness(out.dual.rv);
  out.norm = std::sqrt(std::max(0.0, gu.dot(out.dual.ru) + gv.dot(out.dual.rv)));
  out.riesz = StatePair(RadialField(s.u.grid_ptr(), std::move(gu)),
                        RadialField(s.v.grid_ptr(), std::move(gv)));
  return out;
}

double energy_J(const RadialField& u, double lambda, double mu, double theta) {
  const RadialGrid& g = u.grid();
  Vec up = positive_part(u.values());
  double l2 = integrate_nodal(g, up.cwiseProduct(up));
  double l4 = integrate_nodal(g, up.array().pow(4).matrix());
  double lm = integrate_nodal(g, sq_log_sq(up));
  return 0.5 * dirichlet_energy(u) - 0.5 * lambda * l2 - 0.25 * mu * l4 -
         0.5 * theta * (lm - l2);
}

Vec weak_residual_single(const RadialField& u, double lambda, double mu, double theta) {
  const RadialGrid& g = u.grid();
  Vec up = positive_part(u.values());
  Vec f = lambda * up + mu * up.array().pow(3).matrix() + theta * plog_sq(up);
  return g.apply_stiffness(u.values()) - g.mass().cwiseProduct(f);
}

double energy_limit_E(const StatePair& s, double mu1, double mu2, double beta) {
  const RadialGrid& g = s.grid();
  const Vec& u = s.u.values();
  const Vec& v = s.v.values();
  Vec u2 = u.cwiseProduct(u), v2 = v.cwiseProduct(v);
  double l4u = integrate_nodal(g, u2.cwiseProduct(u2));
  double l4v = integrate_nodal(g, v2.cwiseProduct(v2));
  double cross = integrate_nodal(g, u2.cwiseProduct(v2));
  return 0.5 * (dirichlet_energy(s.u) + dirichlet_energy(s.v)) -
         0.25 * (mu1 * l4u + 2.0 * beta * cross + mu2 * l4v);
}

std::pair<double, double> nehari_residuals(const StatePair& s, const ParameterSet& p) {
  StateIntegrals I = state_integrals(s);
  double g1 = I.grad2_u - p.lambda1 * I.l2_u - p.mu1 * I.l4_u - p.beta * I.cross -
              p.theta1 * I.logm_u;
  double g2 = I.grad2_v - p.lambda2 * I.l2_v - p.mu2 * I.l4_v - p.beta * I.cross -
              p.theta2 * I.logm_v;
  return {g1, g2};
}

NehariMatrix nehari_matrix(const StatePair& s, const ParameterSet& p) {
  StateIntegrals I = state_integrals(s);
  NehariMatrix m;
  m.m11 = p.mu1 * I.l4_u + p.theta1 * I.l2_u;
  m.m22 = p.mu2 * I.l4_v + p.theta2 * I.l2_v;
  m.m12 = m.m21 = p.beta * I.cross;
  m.diag_dominant = (m.m11 - std::abs(m.m12) > 0.0) && (m.m22 - std::abs(m.m21) > 0.0);
  return m;
}

}  // namespace logcrit
