#pragma once

#include "logcrit/functionals.hpp"

namespace logcrit {

struct NehariProjection {
  double t1 = 1.0, t2 = 1.0;
  StatePair projected;
  int iterations = 0;
  std::pair<double, double> residuals{0.0, 0.0};
  bool multiplicity_unknown = false;  // set outside the Sigma1 regime
};

// scales (u,v) -> (t1 u, t2 v) onto the Nehari set; damped Newton in
// (a,b) = (log t1^2, log t2^2)
NehariProjection project_to_nehari(const StatePair& s, const ParameterSet& p,
                                   double tol = 1e-12, int max_iter = 60);

struct SingleProjection {
  double t = 1.0;
  RadialField projected;
  int iterations = 0;
  double residual = 0.0;
};

SingleProjection project_single(const RadialField& u, double lambda, double mu,
                                double theta, double tol = 1e-12, int max_iter = 60);

// strict diagonal dominance of the Nehari matrix
bool q_certificate(const StatePair& s, const ParameterSet& p);

}  // namespace logcrit
