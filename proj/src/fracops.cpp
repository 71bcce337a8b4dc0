#include "tricomi/fracops.hpp"

#include <cmath>
#include <string>

#include "tricomi/error.hpp"
#include "tricomi/quadrature.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::fracops {

using specfun::even_bessel;

SmoothFunction SmoothFunction::from_callable(ScalarFn f) {
  SmoothFunction s;
  s.value = std::move(f);
  s.order = 0;
  return s;
}

SmoothFunction SmoothFunction::from_polynomial(const Polynomial& p) {
  SmoothFunction s;
  s.value = p;
  s.d1 = p.derivative(1);
  s.d2 = p.derivative(2);
  s.d3 = p.derivative(3);
  s.order = 3;
  return s;
}

double rl_integral(double mu, const ScalarFn& f, double x, int n) {
  if (!(mu > 0.0)) throw DomainError("rl_integral: order must be positive");
  if (x < 0.0) throw DomainError("rl_integral: x must be non-negative");
  if (x == 0.0) return 0.0;
  const auto& rule = quadrature::cached_gauss_jacobi(n, mu - 1.0, 0.0);
  double s = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) s += rule.weights[k] * f(x * rule.nodes[k]);
  return std::pow(x, mu) * s * specfun::recip_gamma(mu);
}

double rl_derivative_q(double q, const SmoothFunction& f, double x, int n) {
  if (!(q > 1.0 && q < 2.0)) throw DomainError("rl_derivative_q: order must lie in (1, 2)");
  if (f.order < 2 || !f.d1 || !f.d2) {
    throw DomainError("rl_derivative_q: second derivative must be supplied");
  }
  if (std::abs(f.value(0.0)) > 1e-12 || std::abs(f.d1(0.0)) > 1e-12) {
    throw DomainError("rl_derivative_q: requires f(0) = f'(0) = 0");
  }
  return rl_integral(2.0 - q, f.d2, x, n);
}

double op_A(double k, double lambda2, const ScalarFn& g, double x, int n) {
  if (x < k) throw DomainError("op_A: requires x >= k");
  const double gx = g(x);
  if (lambda2 == 0.0 || x == k) return gx;
  const double integral = quadrature::integrate(
      [&](double t) { return g(t) * (t - k) * even_bessel(1.0, lambda2 * (x - k) * (x - t)); }, k, x,
      n);
  return gx - 0.25 * lambda2 * integral;
}

double op_B(double k, double lambda2, const ScalarFn& g, double x, int n) {
  if (x < k) throw DomainError("op_B: requires x >= k");
  const double gx = g(x);
  if (lambda2 == 0.0 || x == k) return gx;
  const double integral = quadrature::integrate(
      [&](double t) { return g(t) * (k - t) * even_bessel(1.0, lambda2 * (k - t) * (x - t)); }, k, x,
      n);
  return gx - 0.25 * lambda2 * integral;
}

double lemma1_lhs(double beta, double lambda2, const ScalarFn& g, double x, int n) {
  if (!(beta < 1.0)) throw DomainError("lemma1_lhs: requires beta < 1");
  if (x <= 0.0) return 0.0;
  const auto& rule = quadrature::cached_gauss_jacobi(n, -beta, 0.0);
  double s = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double u = rule.nodes[k];
    s += rule.weights[k] * even_bessel(-beta, lambda2 * x * x * u * (1.0 - u)) * g(x * u);
  }
  return std::pow(x, 1.0 - beta) * s;
}

double lemma1_rhs(double beta, double lambda2, const ScalarFn& g, double x, int n) {
  if (!(beta < 1.0)) throw DomainError("lemma1_rhs: requires beta < 1");
  const ScalarFn b_of_g = [&](double t) { return op_B(0.0, -lambda2, g, t, n); };
  return specfun::gamma_real(1.0 - beta) * rl_integral(1.0 - beta, b_of_g, x, n);
}

}  // namespace tricomi::fracops
