#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tricomi/error.hpp"
#include "tricomi/grid_function.hpp"
#include "tricomi/volterra.hpp"

using namespace tricomi;
using namespace tricomi::volterra;

namespace {

// sigma = -2 beta - 2 = -0.5 at alpha = -0.25, so the oracle substitution is smooth
double kernel(const ProblemParameters& p, double r) { return oracle::even_bessel_neg(p.beta + 1.0, -p.lambda2 * r * r); }

double manufactured_error(const ProblemParameters& p, std::size_t n) {
  const double sigma = -2.0 * p.beta - 2.0;
  const double c = nu_coefficient(p);
  auto exact = [](double x) { return x * x * (1.0 - x); };
  const auto grid = uniform_grid(n);
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid[i];
    q[i] = exact(x) - c * oracle::weakly_singular([&](double s) { return kernel(p, x - s) * exact(s); }, x, sigma, 2000);
  }
  const auto nu = solve_volterra_20(p, GridFunction(grid, q));
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) e = std::max(e, std::abs(nu.values()[i] - exact(grid[i])));
  return e;
}

}  // namespace

TEST_SUITE("volterra") {

TEST_CASE("coefficients") {
  const auto p = derive_parameters(-0.25, 0.5, 0.0);
  const double b = -0.75;
  CHECK(nu_coefficient(p) == doctest::Approx(2 * b * (2 * b + 1) * p.gamma3 / std::tgamma(1.5)).epsilon(1e-14));
  CHECK(q_coefficient(p) ==
        doctest::Approx(4 * b * (2 * b + 1) * std::cos(std::numbers::pi * b) / (std::tgamma(1.5) * std::tgamma(1 - b))).epsilon(1e-14));
}

TEST_CASE("Abel equation") {
  const auto grid = uniform_grid(401);
  std::vector<double> q(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) q[i] = 1.0 - 2.0 * std::sqrt(grid[i]);
  const auto nu = solve_weakly_singular(grid, -0.5, 1.0, [](double) { return 1.0; }, q);
  double e = 0.0;
  for (double v : nu) e = std::max(e, std::abs(v - 1.0));
  CHECK(e < 1e-4);
}

TEST_CASE("homogeneous equation has the zero solution") {
  const auto p = derive_parameters(-0.25, 0.5, 1.0);
  const auto grid = uniform_grid(51);
  const auto nu = solve_volterra_20(p, GridFunction::sample(grid, [](double) { return 0.0; }));
  for (double v : nu.values()) CHECK(v == 0.0);
}

TEST_CASE("manufactured smooth solution converges") {
  for (double l2 : {0.0, 1.0, -1.0}) {
    const auto p = derive_parameters(-0.25, 0.5, l2);
    const double e1 = manufactured_error(p, 101);
    const double e2 = manufactured_error(p, 201);
    const double e3 = manufactured_error(p, 401);
    CHECK(e3 < 1e-5);
    CHECK(std::log2(e1 / e2) >= 1.5);
    CHECK(std::log2(e2 / e3) >= 1.5);
  }
}

TEST_CASE("linearity") {
  const auto p = derive_parameters(-0.25, 0.5, -1.0);
  const auto grid = uniform_grid(201);
  const auto q1 = GridFunction::sample(grid, [](double x) { return x; });
  const auto q2 = GridFunction::sample(grid, [](double x) { return std::sin(4.0 * x); });
  const auto q3 = GridFunction::sample(grid, [](double x) { return 2.0 * x - 3.0 * std::sin(4.0 * x); });
  const auto n1 = solve_volterra_20(p, q1), n2 = solve_volterra_20(p, q2), n3 = solve_volterra_20(p, q3);
  double e = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    e = std::max(e, std::abs(n3.values()[i] - 2.0 * n1.values()[i] + 3.0 * n2.values()[i]));
  }
  CHECK(e < 1e-10);
}

TEST_CASE("solution satisfies the equation under independent quadrature") {
  const auto p = derive_parameters(-0.25, 0.5, 1.0);
  const double sigma = -2.0 * p.beta - 2.0;
  const double c = nu_coefficient(p);
  auto Q = [](double x) { return x * (1.0 + x); };
  const auto grid = uniform_grid(401);
  const auto nu = solve_volterra_20(p, GridFunction::sample(grid, Q));
  double r = 0.0;
  for (double x : {0.1, 0.37, 0.5, 0.81, 1.0}) {
    const double integral = oracle::weakly_singular([&](double s) { return kernel(p, x - s) * nu(s); }, x, sigma, 8000);
    r = std::max(r, std::abs(nu(x) - c * integral - Q(x)));
  }
  CHECK(r < 1e-5);
}

TEST_CASE("assemble_Q") {
  const auto p0 = derive_parameters(-0.25, 0.5, 0.0);
  const double sigma = -2.0 * p0.beta - 2.0;
  const auto grid = uniform_grid(21);
  auto phi = [](double t) { return 1.5 * std::pow(t, 1.5) / std::tgamma(3.25); };
  const auto Q = assemble_Q(p0, phi, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double ref = q_coefficient(p0) * 1.5 / std::tgamma(3.25) * std::beta(2.5, sigma + 1.0) * std::pow(x, sigma + 2.5);
    CHECK(std::abs(Q.values()[i] - ref) < 1e-10);
  }
  CHECK(Q.values()[0] == 0.0);

  const auto p1 = derive_parameters(-0.25, 0.5, 1.0);
  const auto Q1 = assemble_Q(p1, phi, grid);
  for (std::size_t i = 1; i < grid.size(); i += 4) {
    const double x = grid[i];
    const double ref = q_coefficient(p1) * oracle::weakly_singular([&](double s) { return kernel(p1, x - s) * phi(s); }, x, sigma, 20000);
    CHECK(std::abs(Q1.values()[i] - ref) < 1e-8);
  }
  const auto Qz = assemble_Q(p1, [](double) { return 0.0; }, grid);
  for (double v : Qz.values()) CHECK(v == 0.0);
}

TEST_CASE("zero data passes the Green relation") {
  const auto p = derive_parameters(-0.25, 0.5, 0.0);
  const std::vector<double> pts{0.25, 0.5, 0.75};
  CHECK(verify_19(p, [](double) { return 0.0; }, [](double) { return 0.0; }, pts) == 0.0);
}

TEST_CASE("solver input checks") {
  const std::vector<double> g{0.0, 0.5, 1.0};
  const std::vector<double> q{0.0, 1.0};
  CHECK_THROWS(solve_weakly_singular(g, -0.5, 1.0, [](double) { return 1.0; }, q));
}

}  // TEST_SUITE
