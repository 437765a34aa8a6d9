#pragma once

#include <Eigen/Dense>
#include <memory>
#include <stdexcept>

namespace logcrit {

using Vec = Eigen::VectorXd;

inline constexpr double omega4 = 2.0 * 3.14159265358979323846 * 3.14159265358979323846;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform radial mesh on (0,R) for the 4-ball, interior nodes r_j = j*h,
// h = R/(n+1).  Dirichlet at r=R, zero-slope regularity at r=0.  Quadrature
// is the P1 hat-weight rule against r^3 dr with the two boundary hat weights
// folded back onto interior nodes by linear extrapolation; it is exact for
// integrands 1 and r and second-order otherwise.
class RadialGrid {
public:
  RadialGrid(double radius, int n);

  double radius() const { return radius_; }
  int n() const { return n_; }
  double h() const { return h_; }
  const Vec& nodes() const { return nodes_; }
  // effective interior quadrature weights for \int_0^R f r^3 dr (no omega4)
  const Vec& quad_weights() const { return W_; }
  // lumped-mass diagonal omega4 * W
  const Vec& mass() const { return mass_; }

  // stiffness matrix of omega4 * \int f' g' r^3 dr (tridiagonal, SPD)
  const Vec& stiff_diag() const { return d_; }
  const Vec& stiff_off() const { return e_; }

  Vec apply_stiffness(const Vec& f) const;
  Vec solve_stiffness(const Vec& rhs) const;

private:
  double radius_;
  int n_;
  double h_;
  Vec nodes_, W_, mass_, d_, e_;
  // prefactored Thomas coefficients
  Vec thomas_c_, thomas_m_;
};

class RadialField {
public:
  RadialField() = default;
  RadialField(std::shared_ptr<const RadialGrid> grid, Vec values);
  explicit RadialField(std::shared_ptr<const RadialGrid> grid);

  const RadialGrid& grid() const { return *grid_; }
  const std::shared_ptr<const RadialGrid>& grid_ptr() const { return grid_; }
  const Vec& values() const { return values_; }
  Vec& values() { return values_; }

private:
  std::shared_ptr<const RadialGrid> grid_;
  Vec values_;
};

std::shared_ptr<const RadialGrid> make_grid(double radius, int n);

// nodal quadrature omega4 * sum W_j g_j for arbitrary nodal samples g
double integrate_nodal(const RadialGrid& g, const Vec& samples);

// \int_Omega |f|^p; fractional p requires f >= 0
double integrate_power(const RadialField& f, double p);

// omega4 * \int_0^R (f')^2 r^3 dr via the stiffness pairing
double dirichlet_energy(const RadialField& f);

// H_0^1 inner product of two fields
double h1_inner(const RadialField& f, const RadialField& g);

// \int (f^+)^2 log (f^+)^2, integrand extended by 0 where f <= 0
double log_moment(const RadialField& f);
double log_moment(const RadialGrid& g, const Vec& values);

// solves -Delta g = f (radial 4-D form) with g(R)=0, g'(0)=0
RadialField riesz_solve(const RadialField& f);
// same but the load is an arbitrary dual vector b (already mass-weighted)
Vec riesz_solve_dual(const RadialGrid& g, const Vec& b);

struct Eigenpair {
  double lambda;
  RadialField mode;
  int iterations;
};

// principal Dirichlet eigenpair of -Delta on the ball, |e1|_2 = 1, e1 > 0
Eigenpair principal_eigenpair(std::shared_ptr<const RadialGrid> grid,
                              double tol = 1e-13, int max_iter = 500);

// Richardson-extrapolated continuum estimate of lambda_1(B_R)
double lambda1_ball(double radius);

// first positive root of the Bessel function J1 (oracle for lambda1_ball)
double bessel_j1_first_root();

}  // namespace logcrit
