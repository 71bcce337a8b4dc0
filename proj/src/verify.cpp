#include <algorithm>
#include <cmath>
#include <numbers>

#include "tricomi/fracops.hpp"
#include "tricomi/parabolic.hpp"
#include "tricomi/pipeline.hpp"
#include "tricomi/quadrature.hpp"
#include "tricomi/specfun.hpp"
#include "tricomi/volterra.hpp"

namespace tricomi {

namespace {

double theorem1_sup() {
  const fracops::ScalarFn gs[] = {[](double x) { return x * x; },
                                  [](double x) { return x * x * x * (1.0 - x); }};
  double sup = 0.0;
  for (const auto& g : gs) {
    for (double k : {0.0, 0.3}) {
      for (double l2 : {-4.0, 0.0, 4.0}) {
        const fracops::ScalarFn bg = [&](double t) { return fracops::op_B(k, l2, g, t); };
        const fracops::ScalarFn ag = [&](double t) { return fracops::op_A(k, l2, g, t); };
        for (int i = 1; i <= 50; ++i) {
          const double x = k + (1.0 - k) * i / 50.0;
          sup = std::max(sup, std::abs(fracops::op_A(k, l2, bg, x) - g(x)));
          sup = std::max(sup, std::abs(fracops::op_B(k, l2, ag, x) - g(x)));
        }
      }
    }
  }
  return sup;
}

double lemma1_sup() {
  const fracops::ScalarFn g = [](double x) { return x * x * (1.0 - x); };
  double sup = 0.0;
  for (double l2 : {0.0, 1.0}) {
    for (int i = 1; i <= 20; ++i) {
      const double x = i / 20.0;
      sup = std::max(sup, std::abs(fracops::lemma1_lhs(-0.75, l2, g, x) - fracops::lemma1_rhs(-0.75, l2, g, x)));
    }
  }
  return sup;
}

double abel_error() {
  const auto grid = uniform_grid(401);
  std::vector<double> q(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) q[i] = 1.0 - 2.0 * std::sqrt(grid[i]);
  const auto nu = volterra::solve_weakly_singular(grid, -0.5, 1.0, [](double) { return 1.0; }, q);
  double e = 0.0;
  for (double v : nu) e = std::max(e, std::abs(v - 1.0));
  return e;
}

// nu* = x^2 (1-x) in the equation of the baseline parameters with lambda^2 = 1; Q from a
// 64-point Gauss-Jacobi evaluation of the integral, which is exact up to the Bessel factor.
double manufactured_error(std::size_t n) {
  const auto p = derive_parameters(-0.25, 0.5, 1.0);
  const double sigma = -2.0 * p.beta - 2.0;
  const double c = volterra::nu_coefficient(p);
  auto kern = [&](double r) { return specfun::even_bessel(-p.beta - 1.0, -p.lambda2 * r * r); };
  auto exact = [](double x) { return x * x * (1.0 - x); };
  const auto grid = uniform_grid(n);
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid[i];
    q[i] = exact(x) - c * quadrature::singular_integral([&](double s) { return kern(x - s) * exact(s); }, x, sigma, 64);
  }
  const auto nu = volterra::solve_weakly_singular(grid, sigma, c, kern, q);
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) e = std::max(e, std::abs(nu[i] - exact(grid[i])));
  return e;
}

}  // namespace

DiagnosticsReport run_verification() {
  DiagnosticsReport rep;

  rep.add_check("theorem1_inverse", theorem1_sup(), 1e-7);
  rep.add_check("lemma1_identity", lemma1_sup(), 1e-6);

  {
    double e = 0.0;
    for (double g : {-0.75, -0.25, 0.0, 0.5, 1.0, 2.5}) e = std::max(e, std::abs(specfun::even_bessel(g, 0.0) - 1.0));
    double s = 0.0;
    for (double w = 0.05; w < 30.0; w += 0.37) {
      s = std::max(s, std::abs(specfun::even_bessel(0.5, w) - std::sin(std::sqrt(w)) / std::sqrt(w)));
    }
    rep.add_check("even_bessel_origin", e, 1e-15);
    rep.add_check("even_bessel_half_order", s, 1e-10);
  }

  rep.add_check("volterra_abel", abel_error(), 1e-4);
  {
    const double e1 = manufactured_error(101);
    const double e2 = manufactured_error(201);
    const double e3 = manufactured_error(401);
    rep.add_check("volterra_manufactured", e3, 1e-5);
    rep.add_at_least("volterra_order", std::min(std::log2(e1 / e2), std::log2(e2 / e3)), 1.5);
  }

  {
    const parabolic::FundamentalSolution heat(1.0, 0.0);
    double sup = 0.0;
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (double y : {0.05, 0.1, 0.2, 0.5, 1.0}) {
        const double exact = std::exp(-x * x / (4.0 * y)) / (2.0 * std::sqrt(std::numbers::pi * y));
        sup = std::max(sup, std::abs(heat(x, y) - exact));
      }
    }
    rep.add_check("heat_kernel_gate", sup, 1e-6);
  }
  return rep;
}

}  // namespace tricomi
