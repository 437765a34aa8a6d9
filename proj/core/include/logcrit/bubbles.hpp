#pragma once

#include <vector>

#include "logcrit/solvers.hpp"

namespace logcrit {

struct BubbleIntegrals {
  double eps = 0.0;
  double grad2 = 0.0, l4 = 0.0, l2 = 0.0, l2log = 0.0;
  double cutoff_inner = 0.0, cutoff_outer = 0.0;
  // displayed lower/upper expressions bracketing l2log
  double bracket_lo = 0.0, bracket_hi = 0.0;
};

// xi(r) * U_eps(r) with U_eps = 2 sqrt2 eps / (eps^2 + r^2); quintic
// smoothstep cutoff, xi == 1 on [0, r_cut], xi == 0 beyond 2 r_cut
RadialField bubble_field(double eps, std::shared_ptr<const RadialGrid> grid,
                         double r_cut);

BubbleIntegrals bubble_integrals(double eps,
                                 std::shared_ptr<const RadialGrid> grid,
                                 double r_cut);

struct GapRow {
  double eps = 0.0;
  double s1 = 0.0, s2 = 0.0;  // Nehari scalings of the projected pair
  double energy = 0.0;
  bool ok = false;
  std::string note;
};

struct GapReport {
  std::vector<GapRow> rows;
  double best_energy = 0.0;      // min over the usable epsilons
  double comparison_level = 0.0; // right-hand side the bound is checked against
  bool gap_holds = false;
  std::vector<std::string> notes;
};

// projects (u_single, bubble) pairs to the Nehari set across an epsilon list
// and compares the best level with min{C_theta1 + S^2/(4 mu2), quarter-sum}
GapReport gap_report_semitrivial(const ParameterSet& p, const std::vector<double>& eps_list,
                            const RadialField& u_single, double c_theta1);

// evaluates max_t L(t w_eps, t z_eps) with (w,z) = (sqrt k, sqrt l) bubbles
// and compares the best level with the limit level A
GapReport gap_report_bubble_ray(const ParameterSet& p, const std::vector<double>& eps_list,
                            std::shared_ptr<const RadialGrid> grid);

// max over t>0 of L(t u, t v) along a fixed ray (golden section on log t)
double ray_max(const StatePair& s, const ParameterSet& p, double* arg_t = nullptr);

}  // namespace logcrit
