// Acceptance gate: twelve numbered criteria, one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "logcrit/bubbles.hpp"
#include "logcrit/nonexistence.hpp"
#include "logcrit/report.hpp"

using namespace logcrit;

namespace {

constexpr double pi = 3.14159265358979323846;
const double S2_exact = 32.0 * pi * pi / 3.0;

int failures = 0;

void report(int number, bool ok, const std::string& what) {
  std::printf("criterion %2d: %s  %s\n", number, ok ? "PASS" : "FAIL",
              what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(double x) { return format_double(x); }

RadialField smooth_positive(std::shared_ptr<const RadialGrid> grid,
                            std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(0.3, 2.0), mix(0.0, 0.6);
  double a = amp(rng), m = mix(rng);
  double R = grid->radius();
  Vec vals(grid->n());
  for (int i = 0; i < grid->n(); ++i) {
    double x = grid->nodes()[i] / R;
    vals[i] = a * (1.0 - x * x) * (1.0 + m * std::sin(2.5 * x));
  }
  return RadialField(std::move(grid), std::move(vals));
}

RadialField smooth_signed(std::shared_ptr<const RadialGrid> grid,
                          std::mt19937_64& rng) {
  std::normal_distribution<double> amp(0.0, 1.0);
  double a = amp(rng), b = amp(rng), c = amp(rng);
  double R = grid->radius();
  Vec vals(grid->n());
  for (int i = 0; i < grid->n(); ++i) {
    double x = grid->nodes()[i] / R;
    vals[i] = (1.0 - x * x) * (a + b * std::cos(3.0 * x) + c * x * x);
  }
  return RadialField(std::move(grid), std::move(vals));
}

// 1. Sobolev constant against the closed form, improving under refinement
void criterion_1() {
  double target = S2_exact;
  std::vector<int> sizes{512, 1024, 2048};
  std::vector<double> errs;
  for (int n : sizes) {
    double S = sobolev_constant(100.0, n);
    errs.push_back(std::abs(S * S - target) / target);
  }
  bool close = errs.back() < 0.005;
  bool monotone = errs[1] <= errs[0] && errs[2] <= errs[1];
  report(1, close && monotone,
         "S^2 relative errors " + fmt(errs[0]) + " -> " + fmt(errs[1]) +
             " -> " + fmt(errs[2]) + " (needs final < 0.005, decreasing)");
}

// 2. principal eigenvalue and its exact scaling in the radius
void criterion_2() {
  double j11 = bessel_j1_first_root();
  double ref = j11 * j11;
  double lam = lambda1_ball(1.0);
  double rel = std::abs(lam - ref) / ref;
  double base = lambda1_ball(0.5) * 0.25;
  double worst_scaling = 0.0;
  for (double R : {1.0, 2.0})
    worst_scaling = std::max(
        worst_scaling, std::abs(lambda1_ball(R) * R * R - base) / base);
  report(2, rel < 1e-3 && worst_scaling < 1e-6,
         "lambda1(B_1) rel err " + fmt(rel) + " (cap 1e-3), R^2-scaling drift " +
             fmt(worst_scaling) + " (cap 1e-6)");
}

// 3. bubble concentration asymptotics on B_8 with cutoff at 2
void criterion_3() {
  auto g = make_grid(8.0, 1024);
  bool ok = true;
  std::string detail;
  double prev_l2 = 1e300;
  for (double eps : {0.2, 0.1, 0.05}) {
    BubbleIntegrals bi = bubble_integrals(eps, g, 2.0);
    double grad_err = std::abs(bi.grad2 / S2_exact - 1.0);
    if (grad_err > 5.0 * eps * eps) ok = false;
    double l2_ref = 8.0 * omega4 * eps * eps * std::abs(std::log(eps));
    double l2_err = std::abs(bi.l2 / l2_ref - 1.0);
    if (l2_err >= prev_l2) ok = false;
    prev_l2 = l2_err;
    double slack = 5.0 * eps * eps * std::abs(bi.bracket_hi - bi.bracket_lo) +
                   0.05 * std::abs(bi.bracket_hi);
    if (bi.l2log < bi.bracket_lo - slack || bi.l2log > bi.bracket_hi + slack)
      ok = false;
    detail += " eps=" + fmt(eps) + ":grad_err=" + fmt(grad_err);
  }
  report(3, ok, "gradient mass within 5 eps^2 of S^2, L2 law improving," +
                    detail);
}

// 4. threshold formulas: linear system residuals, beta2 dominance, beta1 identity
void criterion_4() {
  bool ok = true;
  std::mt19937_64 rng(4444);
  std::uniform_real_distribution<double> mu_d(0.2, 5.0), th_d(0.05, 3.0),
      la_d(0.0, 5.0);
  double worst_kl = 0.0;
  for (int i = 0; i < 500; ++i) {
    double mu1 = mu_d(rng), mu2 = mu_d(rng);
    double cap = 0.9 * std::sqrt(mu1 * mu2);
    std::uniform_real_distribution<double> b_d(-cap, cap);
    double beta = b_d(rng);
    if (std::abs(beta) < 1e-3) continue;
    auto [k, l] = solve_kl(mu1, mu2, beta);
    worst_kl = std::max({worst_kl, std::abs(mu1 * k + beta * l - 1.0),
                         std::abs(beta * k + mu2 * l - 1.0)});
  }
  if (worst_kl > 1e-12) ok = false;

  int admissible = 0;
  for (int i = 0; i < 1000; ++i) {
    ParameterSet p;
    p.mu1 = mu_d(rng);
    p.mu2 = mu_d(rng);
    p.theta1 = th_d(rng);
    p.theta2 = th_d(rng);
    p.lambda1 = la_d(rng);
    p.lambda2 = la_d(rng);
    double L = lambda_cap(p);
    if (1.0 / (L * L) - (p.mu1 + p.mu2) / L + p.mu1 * p.mu2 < 0.0) continue;
    try {
      if (!(beta2_threshold(p) > p.max_mu())) ok = false;
      ++admissible;
    } catch (const numeric_error&) {
    }
  }
  if (admissible < 50) ok = false;

  for (double mu : {0.5, 1.0, 3.0}) {
    ParameterSet p;
    p.mu1 = p.mu2 = mu;
    if (beta1_threshold(p) != mu / 4.0) ok = false;
  }
  report(4, ok, "kl residual " + fmt(worst_kl) + " (cap 1e-12), " +
                    std::to_string(admissible) +
                    " beta2 samples above max mu, beta1(mu,mu)=mu/4 exact");
}

// 5. gradient and energy identities
void criterion_5() {
  auto g = make_grid(1.0, 96);
  std::mt19937_64 rng(5555);
  ParameterSet p;
  p.lambda1 = 0.7;
  p.mu1 = 1.3;
  p.theta1 = -0.8;
  p.lambda2 = 0.2;
  p.mu2 = 0.9;
  p.theta2 = 0.6;
  p.beta = -0.4;
  double worst_fd = 0.0, worst_id = 0.0;
  int states = 0;
  for (int trial = 0; trial < 25; ++trial) {
    StatePair s(smooth_positive(g, rng), smooth_positive(g, rng));
    StatePair d(smooth_signed(g, rng), smooth_signed(g, rng));
    Gradient grad = grad_L(s, p);
    double directional =
        h1_inner(grad.riesz.u, d.u) + h1_inner(grad.riesz.v, d.v);
    double eps = 1e-6;
    auto at = [&](double t) {
      StatePair st(RadialField(g, s.u.values() + t * d.u.values()),
                   RadialField(g, s.v.values() + t * d.v.values()));
      return energy_L(st, p).total;
    };
    double fd = (at(eps) - at(-eps)) / (2.0 * eps);
    worst_fd = std::max(worst_fd, std::abs(fd - directional) /
                                      (std::abs(fd) + std::abs(directional) + 1e-8));

    auto [l23, r23] = quarter_slope_identity(s, p);
    worst_id = std::max(worst_id,
                        std::abs(l23 - r23) / (std::abs(l23) + std::abs(r23) + 1.0));
    auto [l1, r1] = half_slope_identity(s, p);
    worst_id = std::max(worst_id,
                        std::abs(l1 - r1) / (std::abs(l1) + std::abs(r1) + 1.0));
    ++states;
  }
  report(5, states >= 20 && worst_fd <= 1e-6 && worst_id <= 1e-11,
         "finite-difference gradient error " + fmt(worst_fd) +
             " (cap 1e-6), identity residual " + fmt(worst_id) + " (cap 1e-11)");
}

// 6. Nehari projection quality
void criterion_6() {
  auto g = make_grid(1.0, 128);
  std::mt19937_64 rng(6666);
  ParameterSet p;
  p.lambda1 = 0.3;
  p.theta1 = 0.8;
  p.lambda2 = 0.1;
  p.mu2 = 1.5;
  p.theta2 = 1.2;
  p.beta = 0.1;
  bool ok = true;
  int worst_iters = 0;
  double worst_res = 0.0, worst_prop = 0.0;
  for (int trial = 0; trial < 15; ++trial) {
    StatePair s(smooth_positive(g, rng), smooth_positive(g, rng));
    NehariProjection proj = project_to_nehari(s, p);
    worst_iters = std::max(worst_iters, proj.iterations);
    auto [g1, g2] = nehari_residuals(proj.projected, p);
    double scale = std::max(1.0, std::pow(proj.projected.h1_norm(), 2));
    worst_res = std::max({worst_res, std::abs(g1) / scale, std::abs(g2) / scale});

    NehariProjection again = project_to_nehari(proj.projected, p);
    worst_prop = std::max({worst_prop, std::abs(again.t1 - 1.0),
                           std::abs(again.t2 - 1.0)});
    StatePair sc(RadialField(g, (3.0 * s.u.values()).eval()),
                 RadialField(g, (3.0 * s.v.values()).eval()));
    NehariProjection scaled = project_to_nehari(sc, p);
    worst_prop = std::max({worst_prop, std::abs(scaled.t1 * 3.0 - proj.t1),
                           std::abs(scaled.t2 * 3.0 - proj.t2)});
  }
  if (worst_iters > 20 || worst_res > 1e-10 || worst_prop > 1e-9) ok = false;
  report(6, ok, "max iterations " + std::to_string(worst_iters) +
                    " (cap 20), residual " + fmt(worst_res) +
                    " (cap 1e-10), invariance drift " + fmt(worst_prop) +
                    " (cap 1e-9)");
}

// 7. local minimum in the negative-theta regime
void criterion_7() {
  ParameterSet p;
  p.theta1 = p.theta2 = -1.0;
  p.beta = -0.5;
  DomainConstants dc = ball_geometry(1.0);
  double rho = rho_delta(p, dc).rho;
  auto g = make_grid(1.0, 256);
  StatePair init(seed_bump(g, 0.1), seed_bump(g, 0.1));
  double tol = 1e-8;
  SolveResult res = minimize_local_ball(p, init, rho, tol);
  ResidualCertificate cert = residual_certificate(res, p);
  bool ok = res.converged && res.energy < 0.0 && res.u_min_interior > 0.0 &&
            res.v_min_interior > 0.0 && cert.strong_residual_u <= 10.0 * tol &&
            cert.strong_residual_v <= 10.0 * tol;
  report(7, ok, "energy " + fmt(res.energy) + " < 0, min interior values " +
                    fmt(res.u_min_interior) + "/" + fmt(res.v_min_interior) +
                    " > 0, strong residuals " + fmt(cert.strong_residual_u) +
                    "/" + fmt(cert.strong_residual_v) + " (cap 1e-7)");
}

// 8. Nehari ground state below the semi-trivial comparison level
void criterion_8() {
  ParameterSet p;  // lambda=0, mu=1, theta=1, beta=0.1
  p.beta = 0.1;
  auto g = make_grid(1.0, 256);
  std::mt19937_64 rng(8888);

  // single-equation levels with their predicted bracket
  SolveResult single1 = solve_single(0.0, 1.0, 1.0, SingleMode::nehari_min,
                                     smooth_positive(g, rng), 1e-8);
  double c1 = single1.energy;
  double lower = S2_exact / (4.0 * std::pow(1.0 + std::exp(-1.0), 2));
  double upper = 0.25 * S2_exact;
  bool bracket_ok = single1.converged && c1 >= lower && c1 < upper;

  StatePair init(smooth_positive(g, rng), smooth_positive(g, rng));
  SolveResult res = minimize_on_nehari(p, init, 1e-8);
  double comparison = std::min(c1 + 0.25 * S2_exact, 0.5 * S2_exact);
  bool ok = bracket_ok && res.converged && res.energy < comparison &&
            res.u_min_interior > 0.0 && res.v_min_interior > 0.0;
  report(8, ok, "single level " + fmt(c1) + " in [" + fmt(lower) + "," +
                    fmt(upper) + "), system level " + fmt(res.energy) +
                    " < comparison " + fmt(comparison));
}

// 9. mountain-pass level below the compactness threshold
void criterion_9() {
  ParameterSet p;
  p.mu1 = p.mu2 = 1.0;
  p.theta1 = p.theta2 = -0.004;
  p.beta = -0.5;
  p.radius = 6.0;
  DomainConstants dc = ball_geometry(p.radius);
  auto g = make_grid(p.radius, 512);
  double cap = 0.25 * S2_exact / p.max_mu();
  double level_A = limit_level_A(p, dc);

  // scan the bubble ray endpoints, keep the best pass level
  double best_level = 1e300;
  double init_max_at_best = 0.0;
  for (double eps : {0.05, 0.08, 0.12}) {
    RadialField bub = bubble_field(eps, g, p.radius / 3.0);
    // semi-trivial endpoint: all mass in the first slot
    StatePair dir(bub, RadialField(g, Vec::Zero(g->n())));
    double t = 1.0;
    StatePair end_b = dir;
    for (int iter = 0; iter < 60; ++iter) {
      end_b = StatePair(RadialField(g, (t * dir.u.values()).eval()),
                        RadialField(g, (t * dir.v.values()).eval()));
      if (energy_L(end_b, p).total < -1.0) break;
      t *= 2.0;
    }
    int m = 20;
    double init_max = -1e300;
    for (int i = 0; i <= m; ++i) {
      double s = double(i) / m;
      StatePair st(RadialField(g, (s * end_b.u.values()).eval()),
                   RadialField(g, (s * end_b.v.values()).eval()));
      init_max = std::max(init_max, energy_L(st, p).total);
    }
    auto [path, level] = mountain_pass(p, StatePair::zero(g), end_b, m, 1e-5, 60);
    (void)path;
    bool nonincreasing = level <= init_max + 1e-10 * std::abs(init_max);
    if (nonincreasing && level < best_level) {
      best_level = level;
      init_max_at_best = init_max;
    }
  }
  bool ok = best_level < cap && best_level < level_A;
  report(9, ok, "pass level " + fmt(best_level) + " < threshold " + fmt(cap) +
                    " and < limit level " + fmt(level_A) +
                    " (initial path max " + fmt(init_max_at_best) + ")");
}

// 10. nonexistence margins and the falsification battery
void criterion_10() {
  bool ok = true;
  DomainConstants dc = ball_geometry(1.0);

  // closed-form vs grid minimum, scalar gate
  std::mt19937_64 rng(101010);
  std::uniform_real_distribution<double> mu_d(0.2, 4.0), th_d(-3.0, -0.05),
      la_d(0.0, 20.0);
  double worst1 = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    double mu = mu_d(rng), theta = th_d(rng), lambda = la_d(rng);
    double closed = g_t_min(lambda, mu, theta);
    double t_star = -theta / mu, scan = 1e300;
    for (int i = 0; i <= 100000; ++i) {
      double t = t_star * std::pow(10.0, -2.0 + 4.0 * i / 100000.0);
      scan = std::min(scan, g_t(lambda, mu, theta, t));
    }
    worst1 = std::max(worst1, std::abs(closed - scan) / (1.0 + std::abs(closed)));
  }
  if (worst1 > 1e-9) ok = false;

  // two-variable gate
  double worst2 = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    ParameterSet q;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    q.mu1 = 0.5 + u(rng);
    q.mu2 = q.mu1 + 0.5 + u(rng);
    q.beta = 0.5 * (q.mu1 + q.mu2);
    q.theta1 = 0.2 + u(rng);
    q.theta2 = -0.2 - u(rng);
    double closed = g_st_min(q);
    double s_star = q.theta2 / (q.beta - q.mu2);
    double t_star = q.theta1 / (q.beta - q.mu1);
    double scan = 1e300;
    for (int i = 0; i <= 800; ++i)
      for (int j = 0; j <= 800; ++j) {
        double s = s_star * std::pow(10.0, -1.0 + 2.0 * i / 800.0);
        double t = t_star * std::pow(10.0, -1.0 + 2.0 * j / 800.0);
        scan = std::min(scan, g_st(q, s, t));
      }
    worst2 = std::max(worst2, std::abs(closed - scan) / (1.0 + std::abs(closed)));
  }
  if (worst2 > 1e-8) ok = false;

  // 50-restart battery on a closed-gate instance
  ParameterSet sigma2;
  sigma2.lambda1 = sigma2.lambda2 = dc.lambda1_omega;
  sigma2.theta1 = sigma2.theta2 = -1.0;
  sigma2.beta = 0.5;
  BatteryReport blocked = falsification_battery(sigma2, 50, 20240817, 128);
  if (!blocked.verdict.condition_holds || blocked.positive_hits != 0) ok = false;

  // control: open-gate instance must produce at least one positive state
  ParameterSet control;
  control.theta1 = control.theta2 = -1.0;
  control.beta = -0.5;
  BatteryReport found = falsification_battery(control, 10, 20240817, 128);
  if (found.positive_hits < 1) ok = false;

  report(10, ok, "margin vs grid errors " + fmt(worst1) + "/" + fmt(worst2) +
                     " (caps 1e-9/1e-8), blocked hits " +
                     std::to_string(blocked.positive_hits) + "/50, control hits " +
                     std::to_string(found.positive_hits) + "/10");
}

// 11. supporting inequalities on randomized inputs
void criterion_11() {
  bool ok = true;
  std::mt19937_64 rng(111111);

  // pointwise: s^2 log s^2 <= e^{-1} s^4 for all s > 0
  std::uniform_real_distribution<double> s_d(1e-6, 50.0);
  double worst_pt = -1e300;
  for (int i = 0; i < 100000; ++i) {
    double s = s_d(rng);
    worst_pt = std::max(worst_pt, s * s * std::log(s * s) -
                                      std::exp(-1.0) * s * s * s * s);
  }
  // and at the equality point s^2 = e the gap closes
  if (worst_pt > 1e-12) ok = false;

  // log-Sobolev form: int f^2 log f^2 <= (a/pi)|grad f|^2
  //                   + (log |f|_2^2 - 4 (1 + log a)) |f|_2^2
  auto g = make_grid(1.0, 256);
  double worst_ls = -1e300;
  for (int trial = 0; trial < 30; ++trial) {
    RadialField f = smooth_positive(g, rng);
    double grad2 = dirichlet_energy(f);
    double l2 = integrate_power(f, 2.0);
    double lhs = log_moment(f);
    for (double a : {0.5, 1.0, 2.0}) {
      double rhs = (a / pi) * grad2 +
                   (std::log(l2) - 4.0 * (1.0 + std::log(a))) * l2;
      worst_ls = std::max(worst_ls, lhs - rhs);
    }
  }
  if (worst_ls > 1e-10) ok = false;
  report(11, ok, "pointwise inequality slack " + fmt(worst_pt) +
                     ", log-Sobolev slack " + fmt(worst_ls) +
                     " (both must be <= 0 up to round-off)");
}

// 12. CLI determinism and exit codes
void criterion_12() {
#ifndef LOGCRIT_CLI_PATH
  report(12, false, "CLI path not configured at build time");
#else
  const std::string cli = LOGCRIT_CLI_PATH;
  auto run = [&](const std::string& args) {
    std::string out_path = "/tmp/logcrit_accept_stdout.txt";
    int rc = std::system((cli + " " + args + " > " + out_path + " 2>/dev/null").c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return std::pair<int, std::string>(WEXITSTATUS(rc), ss.str());
  };
  auto write_cfg = [](const std::string& name, const std::string& body) {
    std::string path = "/tmp/logcrit_accept_" + name;
    std::ofstream(path) << body;
    return path;
  };
  std::string good = write_cfg("good.cfg",
                               "lambda1=0\nmu1=1\ntheta1=-1\nlambda2=0\nmu2=1\n"
                               "theta2=-1\nbeta=-0.5\nradius=1\nn=64\n"
                               "pipeline=local_ball\nsolver_tol=1e-6\n");
  auto a = run("solve " + good);
  auto b = run("solve " + good);
  bool deterministic = a.first == 0 && a.second == b.second && !a.second.empty();

  std::string bad_key = write_cfg("badkey.cfg", "frobnicate=1\n");
  std::string gate =
      write_cfg("gate.cfg",
                "lambda1=0\nmu1=1\ntheta1=-1\nlambda2=0\nmu2=1\ntheta2=-1\n"
                "beta=-0.5\nradius=1\nn=64\npipeline=nehari\n");
  bool codes = run("classify " + bad_key).first == 2 &&
               run("classify /tmp/logcrit_accept_missing.cfg").first == 2 &&
               run("solve " + gate).first == 3;
  report(12, deterministic && codes,
         std::string("byte-identical reruns: ") +
             (deterministic ? "yes" : "no") + ", exit codes 2/2/3 honored: " +
             (codes ? "yes" : "no"));
#endif
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
