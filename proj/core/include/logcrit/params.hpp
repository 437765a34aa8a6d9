#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logcrit/radial.hpp"

namespace logcrit {

struct ParameterSet {
  double lambda1 = 0.0, mu1 = 1.0, theta1 = 1.0;
  double lambda2 = 0.0, mu2 = 1.0, theta2 = 1.0;
  double beta = 0.1;
  double radius = 1.0;
  // |beta| cap standing in for the non-closed-form small-coupling window
  double beta0_cap_factor = 0.05;

  void validate() const;
  double max_mu() const { return std::max(mu1, mu2); }
  double min_mu() const { return std::min(mu1, mu2); }
  ParameterSet swapped() const;
};

struct DomainConstants {
  double volume;         // |Omega| for the 4-ball
  double lambda1_omega;  // first Dirichlet eigenvalue
  double sobolev_S;      // best constant S (closed form, domain independent)
  double omega4;         // unit 3-sphere area
};

enum class Region { Sigma1, Sigma2, Sigma3, Sigma4, A1, A2, A3, None };

std::string region_name(Region r);

struct RegionLabel {
  Region region = Region::None;
  // which component a Sigma condition refers to (0 = system-level A region)
  int component = 0;
  double margin = 0.0;
};

struct TheoremEntry {
  std::string id;
  double margin = 0.0;
  std::vector<std::string> checks;
};

struct ClassificationReport {
  ParameterSet params;
  DomainConstants constants;
  std::vector<RegionLabel> regions;
  std::vector<TheoremEntry> applicable_theorems;
  // thresholds; entries are NaN when not defined for the given parameters
  double beta1 = 0.0, beta2 = 0.0, Lambda = 0.0;
  double k = 0.0, l = 0.0, A_level = 0.0;
  double rho = 0.0, delta = 0.0;
  std::vector<std::string> notes;
};

DomainConstants ball_geometry(double radius);

// numerical Rayleigh-quotient estimate of S from the discrete bubble on a
// truncation ball; decreases toward S as the truncation radius grows
double sobolev_constant(double truncation_radius = 100.0, int n = 2048);

double lambda_cap(const ParameterSet& p);
double beta1_threshold(const ParameterSet& p);
double beta2_threshold(const ParameterSet& p);
std::pair<double, double> solve_kl(double mu1, double mu2, double beta);
double limit_level_A(const ParameterSet& p, const DomainConstants& dc);

std::vector<RegionLabel> region_membership(const ParameterSet& p,
                                           const DomainConstants& dc);

// margin helpers used by both the classifier and the solvers
double a_region_margin(Region which, const ParameterSet& p,
                       const DomainConstants& dc);
// Sigma2 componentwise margin; empty when the component is not in Sigma2
std::optional<double> sigma_margin_sigma2(double lambda, double mu, double theta,
                                          const DomainConstants& dc);
bool a_region_sides(Region which, const ParameterSet& p,
                    const DomainConstants& dc);

struct EpsilonShift {
  double epsilon;
  RegionLabel label;
  ParameterSet shifted;
};

std::optional<EpsilonShift> epsilon_shift_search(const ParameterSet& p,
                                                 const DomainConstants& dc);

ClassificationReport classify(const ParameterSet& p);

}  // namespace logcrit
