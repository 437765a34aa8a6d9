#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logcrit/functionals.hpp"
#include "logcrit/nehari.hpp"

namespace logcrit {

struct BallGeometryEstimate {
  double rho = 0.0;
  double delta = 0.0;
  Region region_case = Region::None;
  std::optional<double> epsilon;  // shift used when beta > 0
};

// (rho, delta) of the matched A-region case; beta>0 goes through the
// epsilon-shifted coefficients
BallGeometryEstimate rho_delta(const ParameterSet& p, const DomainConstants& dc);

struct TracePoint {
  int iteration;
  double energy;
  double gradient_norm;
};

struct SolveResult {
  StatePair state;
  double energy = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  double u_min_interior = 0.0, v_min_interior = 0.0;
  std::string classification;
  bool converged = false;
  std::vector<TracePoint> trace;
};

struct SolveOptions {
  double tol = 1e-8;
  int max_iter = 4000;
  bool newton_polish = true;
  bool record_trace = true;
};

SolveResult minimize_local_ball(const ParameterSet& p, const StatePair& init,
                                double rho, double tol);
SolveResult minimize_local_ball(const ParameterSet& p, const StatePair& init,
                                double rho, const SolveOptions& opt);

SolveResult minimize_on_nehari(const ParameterSet& p, const StatePair& init,
                               double tol);
SolveResult minimize_on_nehari(const ParameterSet& p, const StatePair& init,
                               const SolveOptions& opt);

struct PathState {
  std::vector<StatePair> samples;
  int max_index = 0;
  double max_energy = 0.0;
};

std::pair<PathState, double> mountain_pass(const ParameterSet& p,
                                           const StatePair& end_a,
                                           const StatePair& end_b, int segments,
                                           double tol, int max_sweeps = 400);

enum class SingleMode { local_min, nehari_min, mountain_pass };

SolveResult solve_single(double lambda, double mu, double theta, SingleMode mode,
                         const RadialField& init, double tol);

struct ResidualCertificate {
  double strong_residual_u = 0.0, strong_residual_v = 0.0;
  double u_min_interior = 0.0, v_min_interior = 0.0;
  bool q_cert = false;
  double quarter_identity_residual = 0.0, half_identity_residual = 0.0;
};

ResidualCertificate residual_certificate(const SolveResult& r, const ParameterSet& p);

// discrete strong-form residual norm ||-Delta u - rhs||_2 / ||u||_{H_0^1}
double strong_residual_norm(const RadialGrid& g, const Vec& dual, const Vec& u);

// relative residuals of the two energy identities (exact in the continuum)
std::pair<double, double> quarter_slope_identity(const StatePair& s, const ParameterSet& p);
std::pair<double, double> half_slope_identity(const StatePair& s, const ParameterSet& p);

// coercivity pair (lhs, rhs): lhs >= rhs whenever both theta_i < 0
std::pair<double, double> coercivity_gap(const StatePair& s, const ParameterSet& p,
                                         const DomainConstants& dc);

// critical-set lower-bound expressions for the three side-condition cases;
// values are valid lower bounds only at critical points
struct CkLowerBounds {
  std::optional<double> case_theta;  // 2 min theta >= -lambda1(Omega)
  std::optional<double> case_beta_pos;
  std::optional<double> case_beta_window;  // beta in (-sqrt(mu1 mu2), 0)
};
CkLowerBounds ck_lower_bounds(const StatePair& s, const ParameterSet& p,
                              const DomainConstants& dc);

// true when planting a small positive bump in a vanishing component lowers
// the energy (semi-trivial escape probe)
bool escape_probe(const SolveResult& r, const ParameterSet& p);

// small positive seed bump (1 - (r/R)^2)-shaped with given amplitude
RadialField seed_bump(std::shared_ptr<const RadialGrid> grid, double amplitude);

// doubles t0 until energy_L(t e1, t e1) drops below `below`
StatePair default_far_endpoint(const ParameterSet& p,
                               std::shared_ptr<const RadialGrid> grid,
                               double below);

}  // namespace logcrit
