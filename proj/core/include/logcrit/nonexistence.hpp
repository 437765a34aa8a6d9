#pragma once

#include "logcrit/solvers.hpp"

namespace logcrit {

struct NonexistenceVerdict {
  std::string theorem;  // "T16" or "T17"
  bool condition_holds = false;
  double margin = 0.0;
  int restarts = 0;
  int positive_hits = 0;
};

// componentwise nonexistence gate: |theta| + theta log|theta| - theta log mu
// + lambda - lambda1(Omega) >= 0; cross-checked against the grid minimum of
// g(t) = mu t + theta log t + lambda
NonexistenceVerdict theorem16_condition(double lambda, double mu, double theta,
                                        const DomainConstants& dc);

// mixed-sign gate with mu1 < beta < mu2 and theta2 < 0 < theta1 (strict margin)
NonexistenceVerdict theorem17_condition(const ParameterSet& p);

// closed-form minima oracles used by the conditions and their tests
double g_t_min(double lambda, double mu, double theta);
double g_st_min(const ParameterSet& p);
double g_t(double lambda, double mu, double theta, double t);
double g_st(const ParameterSet& p, double s, double t);

struct BatteryReport {
  NonexistenceVerdict verdict;
  int restarts = 0;
  int positive_hits = 0;
  std::vector<SolveResult> hits;
};

// randomized local-ball and mountain-pass probes; counts converged states
// with both interior minima above the positivity threshold
BatteryReport falsification_battery(const ParameterSet& p, int restarts,
                                    unsigned seed = 20240817, int grid_n = 128,
                                    double positivity_threshold = 1e-8);

}  // namespace logcrit
