#include "tricomi/volterra.hpp"

#include <cmath>
#include <numbers>

#include "tricomi/error.hpp"
#include "tricomi/hyperbolic.hpp"
#include "tricomi/ode_bvp.hpp"
#include "tricomi/quadrature.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::volterra {

using specfun::even_bessel;

std::vector<double> solve_weakly_singular(std::span<const double> grid, double sigma, double coeff,
                                          const ScalarFn& kernel, std::span<const double> q) {
  if (q.size() != grid.size()) throw DomainError("solve_weakly_singular: Q and grid differ in length");
  const auto w = quadrature::product_weights(grid, sigma);
  const std::size_t n = grid.size();
  std::vector<double> nu(n, 0.0);
  const double k0 = kernel(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = w.W[i];
    double acc = q[i];
    for (std::size_t j = 0; j < i; ++j) acc += coeff * row[j] * kernel(grid[i] - grid[j]) * nu[j];
    const double diag = 1.0 - coeff * row[i] * k0;
    if (diag == 0.0) throw Error(ErrorCode::kInternal, "solve_weakly_singular: zero diagonal");
    nu[i] = acc / diag;
  }
  return nu;
}

double nu_coefficient(const ProblemParameters& p) {
  return 2.0 * p.beta * (2.0 * p.beta + 1.0) * p.gamma3 / p.gamma_1p_delta;
}

double q_coefficient(const ProblemParameters& p) {
  return 4.0 * p.beta * (2.0 * p.beta + 1.0) * std::cos(std::numbers::pi * p.beta) /
         (p.gamma_1p_delta * specfun::gamma_real(1.0 - p.beta));
}

GridFunction assemble_Q(const ProblemParameters& p, const ScalarFn& phi, std::span<const double> grid,
                        int n) {
  const double sigma = -2.0 * p.beta - 2.0;
  const double c = q_coefficient(p);
  const auto& rule = quadrature::cached_gauss_jacobi(n, sigma, 0.0);
  std::vector<double> q(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    if (x == 0.0) continue;
    double s = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double u = rule.nodes[k];
      const double r = x * (1.0 - u);
      s += rule.weights[k] * even_bessel(-p.beta - 1.0, -p.lambda2 * r * r) * phi(x * u);
    }
    q[i] = c * std::pow(x, sigma + 1.0) * s;
  }
  return GridFunction({grid.begin(), grid.end()}, std::move(q));
}

GridFunction solve_volterra_20(const ProblemParameters& p, const GridFunction& Q) {
  const double sigma = -2.0 * p.beta - 2.0;
  const double l2 = p.lambda2;
  const double g = -p.beta - 1.0;
  auto nu = solve_weakly_singular(
      Q.nodes(), sigma, nu_coefficient(p), [&](double r) { return even_bessel(g, -l2 * r * r); },
      Q.values());
  return GridFunction(Q.nodes(), std::move(nu));
}

double verify_19(const ProblemParameters& p, const ScalarFn& nu, const ScalarFn& phi,
                 std::span<const double> points) {
  double sup = 0.0;
  for (double x : points) {
    const double lhs = ode_bvp::green_integral(p, nu, x);
    const double rhs = hyperbolic::tau_relation_14(p, nu, phi, x, {64});
    sup = std::max(sup, std::abs(lhs - rhs));
  }
  return sup;
}

}  // namespace tricomi::volterra
