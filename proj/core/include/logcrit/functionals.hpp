#pragma once

#include "logcrit/params.hpp"
#include "logcrit/radial.hpp"

namespace logcrit {

struct StatePair {
  RadialField u, v;

  StatePair() = default;
  StatePair(RadialField u_, RadialField v_);
  const RadialGrid& grid() const { return u.grid(); }
  const std::shared_ptr<const RadialGrid>& grid_ptr() const { return u.grid_ptr(); }
  double h1_norm() const;
  static StatePair zero(std::shared_ptr<const RadialGrid> grid);
};

struct EnergyBreakdown {
  // signed contributions; total is their plain sum
  double gradient_u = 0, gradient_v = 0;
  double lambda_u = 0, lambda_v = 0;
  double quartic_u = 0, quartic_v = 0;
  double coupling = 0;
  double log_u = 0, log_v = 0;
  double total = 0;
};

EnergyBreakdown energy_L(const StatePair& s, const ParameterSet& p);

// weak-form residual vectors (dual/load form): A u - mass .* rhs
struct WeakResidual {
  Vec ru, rv;
};
WeakResidual weak_residual(const StatePair& s, const ParameterSet& p);

// H_0^1 Riesz representative of the first variation, plus its H-norm
struct Gradient {
  StatePair riesz;
  WeakResidual dual;
  double norm = 0;
};
Gradient grad_L(const StatePair& s, const ParameterSet& p);

double energy_J(const RadialField& u, double lambda, double mu, double theta);
Vec weak_residual_single(const RadialField& u, double lambda, double mu, double theta);

double energy_limit_E(const StatePair& s, double mu1, double mu2, double beta);

// (G1, G2) = (L'(u,v)(u,0), L'(u,v)(0,v))
std::pair<double, double> nehari_residuals(const StatePair& s, const ParameterSet& p);

struct NehariMatrix {
  double m11, m12, m21, m22;
  bool diag_dominant;
};
NehariMatrix nehari_matrix(const StatePair& s, const ParameterSet& p);

// scalar ingredients shared by the Nehari machinery
struct StateIntegrals {
  double grad2_u, grad2_v;   // |grad u|^2, |grad v|^2
  double l2_u, l2_v;         // |u+|_2^2, |v+|_2^2
  double l4_u, l4_v;         // |u+|_4^4, |v+|_4^4
  double cross;              // |u+ v+|_2^2
  double logm_u, logm_v;     // int (u+)^2 log (u+)^2
};
StateIntegrals state_integrals(const StatePair& s);

}  // namespace logcrit
