#include "logcrit/nehari.hpp"

#include <cmath>

namespace logcrit {

NehariProjection project_to_nehari(const StatePair& s, const ParameterSet& p,
                                   double tol, int max_iter) {
  StateIntegrals I = state_integrals(s);
  if (I.l2_u <= 0.0 || I.l2_v <= 0.0)
    throw precondition_error("Nehari projection needs nontrivial positive parts in both components");

  const double P1 = I.l4_u, P2 = I.l4_v, C = I.cross;
  const double Q1 = I.l2_u, Q2 = I.l2_v;
  const double D1 = I.grad2_u - p.lambda1 * Q1 - p.theta1 * I.logm_u;
  const double D2 = I.grad2_v - p.lambda2 * Q2 - p.theta2 * I.logm_v;
  const double scale = 1.0 + std::abs(D1) + std::abs(D2);

  auto residual = [&](double a, double b, double& r1, double& r2) {
    r1 = p.mu1 * P1 * std::exp(a) + p.beta * C * std::exp(b) + p.theta1 * Q1 * a - D1;
    r2 = p.beta * C * std::exp(a) + p.mu2 * P2 * std::exp(b) + p.theta2 * Q2 * b - D2;
  };

  double a = 0.0, b = 0.0, r1, r2;
  residual(a, b, r1, r2);
  double rn = std::hypot(r1, r2);
  int it = 0;
  for (; it < max_iter && rn > tol * scale; ++it) {
    double j11 = p.mu1 * P1 * std::exp(a) + p.theta1 * Q1;
    double j12 = p.beta * C * std::exp(b);
    double j21 = p.beta * C * std::exp(a);
    double j22 = p.mu2 * P2 * std::exp(b) + p.theta2 * Q2;
    double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det))
      throw numeric_error("Nehari projection: singular Newton Jacobian");
    double da = -(j22 * r1 - j12 * r2) / det;
    double db = -(-j21 * r1 + j11 * r2) / det;
    // halve the step while the residual norm would grow
    double step = 1.0;
    double na, nb, n1, n2, nn;
    for (int k = 0; k < 60; ++k) {
      na = a + step * da;
      nb = b + step * db;
      residual(na, nb, n1, n2);
      nn = std::hypot(n1, n2);
      if (nn < rn || step < 1e-12) break;
      step *= 0.5;
    }
    a = na; b = nb; r1 = n1; r2 = n2;
    if (nn >= rn && rn > tol * scale && it > 0 && step < 1e-12)
      throw numeric_error("Nehari projection: damped Newton stalled");
    rn = nn;
  }
  if (rn > tol * scale)
    throw numeric_error("Nehari projection: no convergence in max_iter iterations");

  NehariProjection out;
  out.t1 = std::exp(0.5 * a);
  out.t2 = std::exp(0.5 * b);
  out.iterations = it;
  out.multiplicity_unknown = !(p.theta1 > 0.0 && p.theta2 > 0.0);
  out.projected = StatePair(
      RadialField(s.u.grid_ptr(), out.t1 * s.u.values()),
      RadialField(s.v.grid_ptr(), out.t2 * s.v.values()));
  out.residuals = nehari_residuals(out.projected, p);
  return out;
}

SingleProjection project_single(const RadialField& u, double lambda, double mu,
                                double theta, double tol, int max_iter) {
  const RadialGrid& g = u.grid();
  Vec up = u.values().cwiseMax(0.0);
  double Q = integrate_nodal(g, up.cwiseProduct(up));
  if (Q <= 0.0) throw precondition_error("Nehari projection of a nonpositive field");
  double P = integrate_nodal(g, up.array().pow(4).matrix());
  double lm = log_moment(g, up);
  double D = dirichlet_energy(u) - lambda * Q - theta * lm;
  double scale = 1.0 + std::abs(D);

  auto residual = [&](double a) { return mu * P * std::exp(a) + theta * Q * a - D; };

  double a = 0.0, r = residual(a);
  int it = 0;
  for (; it < max_iter && std::abs(r) > tol * scale; ++it) {
    double deriv = mu * P * std::exp(a) + theta * Q;
    if (deriv == 0.0 || !std::isfinite(deriv))
      throw numeric_error("single Nehari projection: vanishing Newton derivative");
    double da = -r / deriv;
    double step = 1.0, na = a, nr = r;
    for (int k = 0; k < 60; ++k) {
      na = a + step * da;
      nr = residual(na);
      if (std::abs(nr) < std::abs(r) || step < 1e-12) break;
      step *= 0.5;
    }
    a = na;
    r = nr;
  }
  if (std::abs(r) > tol * scale)
    throw numeric_error("single Nehari projection: no convergence");

  SingleProjection out;
  out.t = std::exp(0.5 * a);
  out.iterations = it;
  out.projected = RadialField(u.grid_ptr(), out.t * u.values());
  // residual of the projected field: t^2 * residual(a) by homogeneity
  out.residual = out.t * out.t * r;
  return out;
}

bool q_certificate(const StatePair& s, const ParameterSet& p) {
  return nehari_matrix(s, p).diag_dominant;
}

}  // namespace logcrit
