#include "logcrit/radial.hpp"

#include <cmath>

namespace logcrit {

namespace {

double moment3(double a, double b) { return (b * b * b * b - a * a * a * a) / 4.0; }
double moment4(double a, double b) {
  return (std::pow(b, 5) - std::pow(a, 5)) / 5.0;
}

}  // namespace

RadialGrid::RadialGrid(double radius, int n) : radius_(radius), n_(n) {
  if (radius <= 0.0) throw domain_error("grid radius must be positive");
  if (n < 16) throw domain_error("grid needs at least 16 interior nodes");
  h_ = radius / (n + 1);
  nodes_ = Vec::LinSpaced(n, h_, n * h_);

  // hat weights w_j = \int phi_j r^3 dr over nodes 0..n+1
  Vec w = Vec::Zero(n + 2);
  for (int j = 0; j <= n + 1; ++j) {
    double rj = j * h_;
    if (j > 0) {
      double a = rj - h_;
      w[j] += (moment4(a, rj) - a * moment3(a, rj)) / h_;
    }
    if (j < n + 1) {
      double b = rj + h_;
      w[j] += (b * moment3(rj, b) - moment4(rj, b)) / h_;
    }
  }
  // fold the boundary weights onto interior nodes with linear extrapolation
  // ghost values f_0 = 2f_1 - f_2, f_{n+1} = 2f_n - f_{n-1}
  W_ = w.segment(1, n);
  W_[0] += 2.0 * w[0];
  W_[1] -= w[0];
  W_[n - 1] += 2.0 * w[n + 1];
  W_[n - 2] -= w[n + 1];
  mass_ = omega4 * W_;

  // stiffness from exact cell moments c_j = \int_{r_j}^{r_{j+1}} r^3 dr;
  // the center cell c_0 drops out (zero-slope convention at r=0)
  d_ = Vec::Zero(n);
  e_ = Vec::Zero(n - 1);
  for (int j = 1; j < n; ++j) {
    double c = moment3(j * h_, (j + 1) * h_);
    d_[j - 1] += c;
    d_[j] += c;
    e_[j - 1] = -c;
  }
  d_[n - 1] += moment3(n * h_, radius);
  d_ *= omega4 / (h_ * h_);
  e_ *= omega4 / (h_ * h_);

  // Thomas forward-elimination factors, reused by every solve
  thomas_c_ = Vec::Zero(n);
  thomas_m_ = Vec::Zero(n);
  thomas_c_[0] = d_[0];
  for (int i = 1; i < n; ++i) {
    thomas_m_[i] = e_[i - 1] / thomas_c_[i - 1];
    thomas_c_[i] = d_[i] - thomas_m_[i] * e_[i - 1];
  }
}

Vec RadialGrid::apply_stiffness(const Vec& f) const {
  Vec out = d_.cwiseProduct(f);
  out.head(n_ - 1) += e_.cwiseProduct(f.tail(n_ - 1));
  out.tail(n_ - 1) += e_.cwiseProduct(f.head(n_ - 1));
  return out;
}

Vec RadialGrid::solve_stiffness(const Vec& rhs) const {
  Vec y = rhs;
  for (int i = 1; i < n_; ++i) y[i] -= thomas_m_[i] * y[i - 1];
  Vec x(n_);
  x[n_ - 1] = y[n_ - 1] / thomas_c_[n_ - 1];
  for (int i = n_ - 2; i >= 0; --i)
    x[i] = (y[i] - e_[i] * x[i + 1]) / thomas_c_[i];
  if (!x.allFinite()) throw numeric_error("tridiagonal solve produced non-finite values");
  return x;
}

RadialField::RadialField(std::shared_ptr<const RadialGrid> grid, Vec values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_->n())
    throw domain_error("field length does not match grid");
  if (!values_.allFinite()) throw domain_error("field has non-finite values");
}

RadialField::RadialField(std::shared_ptr<const RadialGrid> grid)
    : grid_(std::move(grid)), values_(Vec::Zero(grid_->n())) {}

std::shared_ptr<const RadialGrid> make_grid(double radius, int n) {
  return std::make_shared<RadialGrid>(radius, n);
}

double integrate_nodal(const RadialGrid& g, const Vec& samples) {
  return omega4 * g.quad_weights().dot(samples);
}

double integrate_power(const RadialField& f, double p) {
  if (p < 1.0) throw domain_error("integrate_power requires p >= 1");
  const Vec& v = f.values();
  bool integer_p = std::abs(p - std::round(p)) < 1e-14;
  if (!integer_p && v.minCoeff() < 0.0)
    throw domain_error("fractional power of a sign-changing field");
  Vec s(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    s[i] = std::pow(std::abs(v[i]), p);
  return integrate_nodal(f.grid(), s);
}

double dirichlet_energy(const RadialField& f) {
  return f.values().dot(f.grid().apply_stiffness(f.values()));
}

double h1_inner(const RadialField& f, const RadialField& g) {
  return f.values().dot(f.grid().apply_stiffness(g.values()));
}

double log_moment(const RadialGrid& g, const Vec& values) {
  Vec s(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    double u = values[i];
    s[i] = (u > 1e-150) ? u * u * std::log(u * u) : 0.0;
  }
  return integrate_nodal(g, s);
}

double log_moment(const RadialField& f) { return log_moment(f.grid(), f.values()); }

RadialField riesz_solve(const RadialField& f) {
  const RadialGrid& g = f.grid();
  Vec b = g.mass().cwiseProduct(f.values());
  return RadialField(f.grid_ptr(), g.solve_stiffness(b));
}

Vec riesz_solve_dual(const RadialGrid& g, const Vec& b) {
  return g.solve_stiffness(b);
}

Eigenpair principal_eigenpair(std::shared_ptr<const RadialGrid> grid,
                              double tol, int max_iter) {
  const RadialGrid& g = *grid;
  const Vec& B = g.mass();
  Vec x = Vec::Ones(g.n());
  x /= std::sqrt(x.dot(B.cwiseProduct(x)));
  double lambda = x.dot(g.apply_stiffness(x));
  int it = 0;
  for (; it < max_iter; ++it) {
    Vec y = g.solve_stiffness(B.cwiseProduct(x));
    y /= std::sqrt(y.dot(B.cwiseProduct(y)));
    double next = y.dot(g.apply_stiffness(y));
    x = y;
    if (std::abs(next - lambda) <= tol * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  if (it == max_iter)
    throw numeric_error("inverse power iteration did not converge");
  if (x[0] < 0.0) x = -x;
  return Eigenpair{lambda, RadialField(grid, std::move(x)), it + 1};
}

double lambda1_ball(double radius) {
  double coarse = principal_eigenpair(make_grid(radius, 512)).lambda;
  double fine = principal_eigenpair(make_grid(radius, 1024)).lambda;
  return (4.0 * fine - coarse) / 3.0;
}

double bessel_j1_first_root() {
  double lo = 3.0, hi = 4.5;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (std::cyl_bessel_j(1, lo) * std::cyl_bessel_j(1, mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace logcrit
