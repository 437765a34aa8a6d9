#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "logcrit/nehari.hpp"

using namespace logcrit;

namespace {

RadialField positive_field(std::shared_ptr<const RadialGrid> grid,
                           std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(0.3, 2.0);
  std::uniform_real_distribution<double> mix(0.0, 0.6);
  double a = amp(rng), m = mix(rng);
  double R = grid->radius();
  Vec vals(grid->n());
  for (int i = 0; i < grid->n(); ++i) {
    double x = grid->nodes()[i] / R;
    vals[i] = a * (1.0 - x * x) * (1.0 + m * std::sin(2.5 * x));
  }
  return RadialField(std::move(grid), std::move(vals));
}

ParameterSet sigma1_params() {
  ParameterSet p;
  p.lambda1 = 0.3;
  p.mu1 = 1.0;
  p.theta1 = 0.8;
  p.lambda2 = 0.1;
  p.mu2 = 1.5;
  p.theta2 = 1.2;
  p.beta = 0.1;
  return p;
}

}  // namespace

TEST_CASE("projection lands on the Nehari set fast") {
  auto g = make_grid(1.0, 128);
  std::mt19937_64 rng(42);
  ParameterSet p = sigma1_params();
  for (int trial = 0; trial < 15; ++trial) {
    StatePair s(positive_field(g, rng), positive_field(g, rng));
    NehariProjection proj = project_to_nehari(s, p);
    CHECK(proj.iterations <= 20);
    auto [g1, g2] = nehari_residuals(proj.projected, p);
    double scale = proj.projected.h1_norm();
    CHECK(std::abs(g1) <= 1e-10 * std::max(1.0, scale * scale));
    CHECK(std::abs(g2) <= 1e-10 * std::max(1.0, scale * scale));
    CHECK_FALSE(proj.multiplicity_unknown);
  }
}

TEST_CASE("projecting a projected state is the identity") {
  auto g = make_grid(1.0, 128);
  std::mt19937_64 rng(7);
  ParameterSet p = sigma1_params();
  StatePair s(positive_field(g, rng), positive_field(g, rng));
  NehariProjection first = project_to_nehari(s, p);
  NehariProjection second = project_to_nehari(first.projected, p);
  CHECK(std::abs(second.t1 - 1.0) < 1e-9);
  CHECK(std::abs(second.t2 - 1.0) < 1e-9);
}

TEST_CASE("projection is ray invariant") {
  auto g = make_grid(1.0, 128);
  std::mt19937_64 rng(8);
  ParameterSet p = sigma1_params();
  StatePair s(positive_field(g, rng), positive_field(g, rng));
  NehariProjection base = project_to_nehari(s, p);
  for (double c : {0.5, 2.0, 7.0}) {
    StatePair sc(RadialField(g, (c * s.u.values()).eval()),
                 RadialField(g, (c * s.v.values()).eval()));
    NehariProjection scaled = project_to_nehari(sc, p);
    CHECK(scaled.t1 * c == doctest::Approx(base.t1).epsilon(1e-9));
    CHECK(scaled.t2 * c == doctest::Approx(base.t2).epsilon(1e-9));
    double drift = (scaled.projected.u.values() - base.projected.u.values())
                       .cwiseAbs()
                       .maxCoeff();
    CHECK(drift < 1e-9 * std::max(1.0, base.projected.u.values().maxCoeff()));
  }
}

TEST_CASE("projection preconditions") {
  auto g = make_grid(1.0, 64);
  std::mt19937_64 rng(9);
  ParameterSet p = sigma1_params();
  // a component with no positive part cannot be projected
  StatePair s(positive_field(g, rng),
              RadialField(g, Vec::Constant(64, -1.0)));
  CHECK_THROWS_AS(project_to_nehari(s, p), precondition_error);
}

TEST_CASE("multiplicity flag outside the positive-theta regime") {
  auto g = make_grid(1.0, 64);
  std::mt19937_64 rng(10);
  ParameterSet p = sigma1_params();
  p.theta2 = -0.5;
  StatePair s(positive_field(g, rng), positive_field(g, rng));
  NehariProjection proj = project_to_nehari(s, p);
  CHECK(proj.multiplicity_unknown);
}

TEST_CASE("single component projection") {
  auto g = make_grid(1.0, 128);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    RadialField u = positive_field(g, rng);
    SingleProjection proj = project_single(u, 0.2, 1.0, 0.9);
    CHECK(proj.iterations <= 20);
    double scale = std::max(1.0, dirichlet_energy(proj.projected));
    CHECK(std::abs(proj.residual) <= 1e-10 * scale);
    // fixed point
    SingleProjection again = project_single(proj.projected, 0.2, 1.0, 0.9);
    CHECK(std::abs(again.t - 1.0) < 1e-9);
  }
}

TEST_CASE("diagonal dominance certificate on projected states") {
  auto g = make_grid(1.0, 128);
  std::mt19937_64 rng(12);
  ParameterSet p = sigma1_params();  // beta = 0.1 < beta1: weak coupling
  StatePair s(positive_field(g, rng), positive_field(g, rng));
  NehariProjection proj = project_to_nehari(s, p);
  CHECK(q_certificate(proj.projected, p));
}
