#include "logcrit/params.hpp"

#include <cmath>
#include <limits>

#include "logcrit/solvers.hpp"

namespace logcrit {

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr double nan_ = std::numeric_limits<double>::quiet_NaN();
}  // namespace

void ParameterSet::validate() const {
  if (mu1 <= 0.0 || mu2 <= 0.0) throw domain_error("mu coefficients must be positive");
  if (beta == 0.0) throw domain_error("coupling beta must be nonzero");
  if (radius <= 0.0) throw domain_error("radius must be positive");
}

ParameterSet ParameterSet::swapped() const {
  ParameterSet q = *this;
  std::swap(q.lambda1, q.lambda2);
  std::swap(q.mu1, q.mu2);
  std::swap(q.theta1, q.theta2);
  return q;
}

std::string region_name(Region r) {
  switch (r) {
    case Region::Sigma1: return "Sigma1";
    case Region::Sigma2: return "Sigma2";
    case Region::Sigma3: return "Sigma3";
    case Region::Sigma4: return "Sigma4";
    case Region::A1: return "A1";
    case Region::A2: return "A2";
    case Region::A3: return "A3";
    case Region::None: return "None";
  }
  return "None";
}

DomainConstants ball_geometry(double radius) {
  if (radius <= 0.0) throw domain_error("radius must be positive");
  // lambda1 scales exactly as R^-2 on this discretization, so solve once
  static const double l1_unit = lambda1_ball(1.0);
  DomainConstants dc;
  dc.volume = pi * pi * std::pow(radius, 4) / 2.0;
  dc.lambda1_omega = l1_unit / (radius * radius);
  dc.sobolev_S = std::sqrt(32.0 * pi * pi / 3.0);
  dc.omega4 = omega4;
  return dc;
}

double sobolev_constant(double truncation_radius, int n) {
  auto g = make_grid(truncation_radius, n);
  Vec u(n);
  // shift by the boundary value so the profile vanishes at r = R without a
  // gradient spike in the last cell; the bias this adds is O(R^-2)
  double edge = 2.0 * std::sqrt(2.0) /
                (1.0 + truncation_radius * truncation_radius);
  for (int i = 0; i < n; ++i) {
    double r = g->nodes()[i];
    u[i] = 2.0 * std::sqrt(2.0) / (1.0 + r * r) - edge;
  }
  RadialField f(g, u);
  double grad2 = dirichlet_energy(f);
  double l4 = integrate_power(f, 4.0);
  return grad2 / std::sqrt(l4);
}

double lambda_cap(const ParameterSet& p) {
  if (p.theta1 <= 0.0 || p.theta2 <= 0.0)
    throw precondition_error("Lambda requires theta1, theta2 > 0");
  double c1 = p.mu1 / std::pow(p.mu1 + p.theta1 * std::exp(p.lambda1 / p.theta1 - 1.0), 2);
  double c2 = p.mu2 / std::pow(p.mu2 + p.theta2 * std::exp(p.lambda2 / p.theta2 - 1.0), 2);
  return std::min(c1, c2);
}

double beta1_threshold(const ParameterSet& p) {
  double s = 2.0 * std::sqrt(2.0 * (1.0 / p.mu1 + 1.0 / p.mu2));
  return std::min(std::min(p.mu1, p.mu2),
                  std::min(std::sqrt(p.mu1) / s, std::sqrt(p.mu2) / s));
}

double beta2_threshold(const ParameterSet& p) {
  double L = lambda_cap(p);
  double disc = 1.0 / (L * L) - (p.mu1 + p.mu2) / L + p.mu1 * p.mu2;
  if (disc < 0.0)
    throw numeric_error("beta2 quadratic has no real roots (inconsistent Lambda)");
  double root = 1.0 / L + std::sqrt(disc);
  if (!(root > p.max_mu()))
    throw numeric_error("beta2 root degenerate: not above max{mu1,mu2}");
  return root;
}

std::pair<double, double> solve_kl(double mu1, double mu2, double beta) {
  double det = mu1 * mu2 - beta * beta;
  if (std::abs(det) <= 1e-14 * (mu1 * mu2 + beta * beta))
    throw numeric_error("solve_kl: singular system, beta^2 = mu1*mu2");
  return {(mu2 - beta) / det, (mu1 - beta) / det};
}

double limit_level_A(const ParameterSet& p, const DomainConstants& dc) {
  double S2 = dc.sobolev_S * dc.sobolev_S;
  if (p.beta < 0.0) return 0.25 * (1.0 / p.mu1 + 1.0 / p.mu2) * S2;
  if (p.beta < p.min_mu() || p.beta > p.max_mu()) {
    auto [k, l] = solve_kl(p.mu1, p.mu2, p.beta);
    return 0.25 * (k + l) * S2;
  }
  throw domain_error("limit level undefined for beta between min and max of mu");
}

bool a_region_sides(Region which, const ParameterSet& p, const DomainConstants& dc) {
  if (p.theta1 >= 0.0 || p.theta2 >= 0.0) return false;
  double lO = dc.lambda1_omega;
  switch (which) {
    case Region::A1:
      return p.lambda1 >= 0.0 && p.lambda1 < lO && p.lambda2 >= 0.0 && p.lambda2 < lO;
    case Region::A2:
      return p.lambda1 >= 0.0 && p.lambda1 < lO;
    case Region::A3:
      return true;
    default:
      throw domain_error("a_region_sides: not an A region");
  }
}

double a_region_margin(Region which, const ParameterSet& p, const DomainConstants& dc) {
  double S2 = dc.sobolev_S * dc.sobolev_S;
  double lO = dc.lambda1_omega;
  double mx = p.max_mu();
  switch (which) {
    case Region::A1: {
      double m = std::min(lO - p.lambda1, lO - p.lambda2);
      return m * m / (lO * lO * mx) * S2 + 2.0 * (p.theta1 + p.theta2) * dc.volume;
    }
    case Region::A2: {
      double m = lO - p.lambda1;
      return m * m / (lO * lO * mx) * S2 +
             2.0 * (p.theta1 + p.theta2 * std::exp(-p.lambda2 / p.theta2)) * dc.volume;
    }
    case Region::A3:
      return S2 / mx + 2.0 *
                           (p.theta1 * std::exp(-p.lambda1 / p.theta1) +
                            p.theta2 * std::exp(-p.lambda2 / p.theta2)) *
                           dc.volume;
    default:
      throw domain_error("a_region_margin: not an A region");
  }
}

namespace {

// componentwise Sigma margins; membership rules follow the displayed sets
std::optional<double> sigma_margin(Region which, double lambda, double mu,
                                   double theta, const DomainConstants& dc) {
  double S2 = dc.sobolev_S * dc.sobolev_S;
  double lO = dc.lambda1_omega;
  switch (which) {
    case Region::Sigma1:
      if (theta > 0.0) return theta;
      return std::nullopt;
    case Region::Sigma2: {
      if (theta >= 0.0 || mu <= 0.0) return std::nullopt;
      double m = std::abs(theta) + theta * std::log(std::abs(theta)) -
                 theta * std::log(mu) + lambda - lO;
      if (m >= 0.0) return m;
      return std::nullopt;
    }
    case Region::Sigma3: {
      if (theta >= 0.0 || lambda < 0.0 || lambda >= lO) return std::nullopt;
      double d = lO - lambda;
      double m = d * d / (lO * lO * mu) * S2 + 2.0 * theta * dc.volume;
      if (m > 0.0) return m;
      return std::nullopt;
    }
    case Region::Sigma4: {
      if (theta >= 0.0) return std::nullopt;
      double m = S2 / mu + 2.0 * theta * std::exp(-lambda / theta) * dc.volume;
      if (m > 0.0) return m;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::vector<RegionLabel> region_membership(const ParameterSet& p,
                                           const DomainConstants& dc) {
  std::vector<RegionLabel> out;
  const Region sigmas[] = {Region::Sigma1, Region::Sigma2, Region::Sigma3,
                           Region::Sigma4};
  for (Region s : sigmas) {
    if (auto m = sigma_margin(s, p.lambda1, p.mu1, p.theta1, dc))
      out.push_back({s, 1, *m});
    if (auto m = sigma_margin(s, p.lambda2, p.mu2, p.theta2, dc))
      out.push_back({s, 2, *m});
  }
  const Region as[] = {Region::A1, Region::A2, Region::A3};
  for (Region a : as) {
    if (!a_region_sides(a, p, dc)) continue;
    double m = a_region_margin(a, p, dc);
    if (m > 0.0) out.push_back({a, 0, m});
  }
  return out;
}

std::optional<EpsilonShift> epsilon_shift_search(const ParameterSet& p,
                                                 const DomainConstants& dc) {
  if (p.beta <= 0.0)
    throw precondition_error("epsilon shift search requires beta > 0");
  auto shifted_at = [&](double eps) {
    ParameterSet q = p;
    q.mu1 = p.mu1 + p.beta * eps;
    q.mu2 = p.mu2 + p.beta / eps;
    return q;
  };
  const Region as[] = {Region::A1, Region::A2, Region::A3};
  for (Region a : as) {
    if (!a_region_sides(a, p, dc)) continue;  // sides do not involve mu
    auto margin_at = [&](double logeps) {
      return a_region_margin(a, shifted_at(std::exp(logeps)), dc);
    };
    // 121-point log grid on [1e-6, 1e6]
    double best = -std::numeric_limits<double>::infinity();
    double best_x = 0.0;
    for (int i = 0; i <= 120; ++i) {
      double x = -6.0 * std::log(10.0) + i * (12.0 * std::log(10.0) / 120.0);
      double m = margin_at(x);
      if (m > best) { best = m; best_x = x; }
    }
    // golden-section refine around the best grid point
    double step = 12.0 * std::log(10.0) / 120.0;
    double lo = best_x - step, hi = best_x + step;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = margin_at(x1), f2 = margin_at(x2);
    while (hi - lo > 1e-10 * std::max(1.0, std::abs(lo) + std::abs(hi))) {
      if (f1 < f2) {
        lo = x1; x1 = x2; f1 = f2;
        x2 = lo + gr * (hi - lo); f2 = margin_at(x2);
      } else {
        hi = x2; x2 = x1; f2 = f1;
        x1 = hi - gr * (hi - lo); f1 = margin_at(x1);
      }
    }
    double x = 0.5 * (lo + hi);
    double m = margin_at(x);
    if (m > best) { best = m; best_x = x; }
    if (best > 0.0) {
      double eps = std::exp(best_x);
      return EpsilonShift{eps, {a, 0, best}, shifted_at(eps)};
    }
  }
  return std::nullopt;
}

ClassificationReport classify(const ParameterSet& p) {
  p.validate();
  ClassificationReport rep;
  rep.params = p;
  rep.constants = ball_geometry(p.radius);
  const DomainConstants& dc = rep.constants;
  rep.regions = region_membership(p, dc);

  rep.beta1 = beta1_threshold(p);
  rep.Lambda = rep.beta2 = rep.k = rep.l = rep.A_level = rep.rho = rep.delta = nan_;

  bool sigma1_both = p.theta1 > 0.0 && p.theta2 > 0.0;
  if (sigma1_both) {
    rep.Lambda = lambda_cap(p);
    try {
      rep.beta2 = beta2_threshold(p);
    } catch (const numeric_error&) {
      rep.notes.push_back("beta2 quadratic degenerate or complex for these parameters");
    }
  }
  try {
    auto [k, l] = solve_kl(p.mu1, p.mu2, p.beta);
    rep.k = k;
    rep.l = l;
  } catch (const numeric_error&) {
  }
  try {
    rep.A_level = limit_level_A(p, dc);
  } catch (const std::exception&) {
  }
  try {
    BallGeometryEstimate bg = rho_delta(p, dc);
    rep.rho = bg.rho;
    rep.delta = bg.delta;
  } catch (const std::exception&) {
  }

  auto has_region = [&](Region r) {
    for (const auto& lbl : rep.regions)
      if (lbl.region == r) return true;
    return false;
  };

  if (sigma1_both) {
    double beta0_cap = p.beta0_cap_factor * std::sqrt(p.mu1 * p.mu2);
    if (p.beta < 0.0 && std::abs(p.beta) < beta0_cap) {
      rep.applicable_theorems.push_back(
          {"T1.1(1)", beta0_cap - std::abs(p.beta),
           {"Sigma1 both components",
            "beta<0, applicability window not computable; |beta| under configured cap"}});
      rep.notes.push_back(
          "T1.1(1) window uses a configurable |beta| cap; the sharp threshold has no closed form");
    }
    if (p.beta > 0.0 && p.beta < rep.beta1)
      rep.applicable_theorems.push_back(
          {"T1.1(2)", rep.beta1 - p.beta, {"Sigma1 both components", "0<beta<beta1"}});
    if (std::isfinite(rep.beta2) && p.beta > rep.beta2)
      rep.applicable_theorems.push_back(
          {"T1.1(3)", p.beta - rep.beta2, {"Sigma1 both components", "beta>beta2"}});
  }

  // Theorem 1.2 gates: direct A-region for beta<0, shifted A-region for beta>0
  double t12_margin = nan_;
  std::vector<std::string> t12_checks;
  if (p.beta < 0.0) {
    for (Region a : {Region::A1, Region::A2, Region::A3}) {
      if (has_region(a)) {
        double m = a_region_margin(a, p, dc);
        if (std::isnan(t12_margin) || m > t12_margin) t12_margin = m;
        t12_checks.push_back("member of " + region_name(a));
      }
    }
  } else {
    auto shift = epsilon_shift_search(p, dc);
    if (shift) {
      t12_margin = shift->label.margin;
      t12_checks.push_back("epsilon-shifted member of " + region_name(shift->label.region));
    }
  }
  bool t12 = std::isfinite(t12_margin);
  if (t12) rep.applicable_theorems.push_back({"T1.2", t12_margin, t12_checks});

  if (t12) {
    bool extra = 2.0 * std::min(p.theta1, p.theta2) >= -dc.lambda1_omega ||
                 p.beta > 0.0 ||
                 (p.beta < 0.0 && p.beta > -std::sqrt(p.mu1 * p.mu2));
    if (extra) {
      auto checks = t12_checks;
      checks.push_back("critical-set side condition");
      rep.applicable_theorems.push_back({"T1.3", t12_margin, checks});
    }
    bool beta_window = p.beta < 0.0 || (p.beta > 0.0 && p.beta < p.min_mu()) ||
                       p.beta > p.max_mu();
    double g1 = 1.0 - 32.0 * std::exp(p.lambda1 / p.theta1) / (p.mu1 * p.radius * p.radius);
    double g2 = 1.0 - 32.0 * std::exp(p.lambda2 / p.theta2) / (p.mu2 * p.radius * p.radius);
    if (beta_window && g1 > 0.0 && g2 > 0.0) {
      auto checks = t12_checks;
      checks.push_back("beta outside [min mu, max mu]");
      checks.push_back("radius gate 32 e^{lambda/theta}/(mu R^2) < 1 both components");
      rep.applicable_theorems.push_back({"T1.5", std::min(g1, g2), checks});
    }
  }

  // nonexistence gates
  auto s2_1 = sigma_margin_sigma2(p.lambda1, p.mu1, p.theta1, dc);
  auto s2_2 = sigma_margin_sigma2(p.lambda2, p.mu2, p.theta2, dc);
  if (p.beta > 0.0 && (s2_1 || s2_2)) {
    double m = s2_1 ? (s2_2 ? std::max(*s2_1, *s2_2) : *s2_1) : *s2_2;
    rep.applicable_theorems.push_back(
        {"T1.6", m, {"a component lies in Sigma2", "beta>0"}});
  }
  if (p.mu1 < p.mu2 && p.mu1 < p.beta && p.beta < p.mu2 && p.theta2 < 0.0 &&
      p.theta1 > 0.0) {
    double m = -p.theta1 * std::log(p.theta1 / (p.beta - p.mu1)) +
               p.theta2 * std::log(p.theta2 / (p.beta - p.mu2)) + p.theta1 -
               p.theta2 + p.lambda2 - p.lambda1;
    if (m > 0.0)
      rep.applicable_theorems.push_back(
          {"T1.7", m, {"mu1<beta<mu2", "theta2<0<theta1", "strict margin positive"}});
  }
  return rep;
}

std::optional<double> sigma_margin_sigma2(double lambda, double mu, double theta,
                                          const DomainConstants& dc) {
  if (theta >= 0.0 || mu <= 0.0) return std::nullopt;
  double m = std::abs(theta) + theta * std::log(std::abs(theta)) -
             theta * std::log(mu) + lambda - dc.lambda1_omega;
  if (m >= 0.0) return m;
  return std::nullopt;
}

}  // namespace logcrit
