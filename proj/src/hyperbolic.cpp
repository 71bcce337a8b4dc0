#include "tricomi/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tricomi/error.hpp"
#include "tricomi/fracops.hpp"
#include "tricomi/quadrature.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::hyperbolic {

using quadrature::cached_gauss_jacobi;
using specfun::even_bessel;
using specfun::gamma_real;

CharacteristicPoint CharacteristicPoint::from_xy(double x, double y) {
  if (y > 0.0) throw DomainError("characteristic coordinates need y <= 0");
  const double r = 2.0 * std::sqrt(-y);
  return {x - r, x + r};
}

void CharacteristicPoint::validate() const {
  if (!(xi >= 0.0 && xi <= eta && eta <= 1.0)) {
    throw DomainError("characteristic point outside 0 <= xi <= eta <= 1: (" + std::to_string(xi) +
                      ", " + std::to_string(eta) + ")");
  }
}

double a_minus_general(const ProblemParameters& p, const ScalarFn& tau, const ScalarFn& bracket,
                       CharacteristicPoint pt, QuadratureSizes q) {
  const double L = pt.eta - pt.xi;
  if (L <= 0.0) return tau(pt.x());
  const double b = p.beta;
  const double l2 = p.lambda2 * L * L;

  // Integrals in t over [xi, eta]; the Jacobi weights carry (eta-t)^b (t-xi)^b after t = xi + L z.
  const auto& r0 = cached_gauss_jacobi(q.jacobi, b, b);
  double first = 0.0;
  for (std::size_t k = 0; k < r0.size(); ++k) {
    const double z = r0.nodes[k];
    first += r0.weights[k] * even_bessel(b, l2 * z * (1.0 - z)) * tau(pt.xi + L * z);
  }
  first *= std::pow(L, 2.0 * b + 1.0);

  const auto& r1 = cached_gauss_jacobi(q.jacobi, b + 1.0, b + 1.0);
  double second = 0.0;
  for (std::size_t k = 0; k < r1.size(); ++k) {
    const double z = r1.nodes[k];
    second += r1.weights[k] * even_bessel(b + 1.0, l2 * z * (1.0 - z)) * bracket(pt.xi + L * z);
  }
  second *= std::pow(L, 2.0 * b + 3.0);

  const double scale = p.gamma1 * std::pow(L, -1.0 - 2.0 * b);
  return scale * first - scale * second / (2.0 * (1.0 + 2.0 * b) * (b + 1.0));
}

double a_minus_xy(const ProblemParameters& p, const ScalarFn& tau, const ScalarFn& bracket, double x,
                  double y, QuadratureSizes q) {
  if (y > 0.0) throw DomainError("a_minus_xy: y must be <= 0");
  if (y == 0.0) return tau(x);
  const double b = p.beta;
  const double r = 2.0 * std::sqrt(-y);
  auto zeta = [&](double z) { return x - r * (1.0 - 2.0 * z); };
  auto sigma2 = [&](double z) { return 16.0 * p.lambda2 * (-y) * z * (1.0 - z); };

  const auto& r0 = cached_gauss_jacobi(q.jacobi, b, b);
  double first = 0.0;
  for (std::size_t k = 0; k < r0.size(); ++k) {
    const double z = r0.nodes[k];
    first += r0.weights[k] * tau(zeta(z)) * even_bessel(b, sigma2(z));
  }
  const auto& r1 = cached_gauss_jacobi(q.jacobi, b + 1.0, b + 1.0);
  double second = 0.0;
  for (std::size_t k = 0; k < r1.size(); ++k) {
    const double z = r1.nodes[k];
    second += r1.weights[k] * bracket(zeta(z)) * even_bessel(1.0 + b, sigma2(z));
  }
  return p.gamma1 * first + 8.0 * p.gamma1 * y / ((1.0 + b) * (1.0 + 2.0 * b)) * second;
}

double a_minus(const ProblemParameters& p, const GridFunction& tau, const GridFunction& nu,
               CharacteristicPoint pt, QuadratureSizes q) {
  const double g = p.gamma_1p_delta;
  return a_minus_general(
      p, [&](double t) { return tau(t); }, [&](double t) { return -g * nu(t); }, pt, q);
}

double u_cauchy_general(const ProblemParameters& p, const ScalarFn& tau, const ScalarFn& bracket,
                        const ScalarFn& nu, CharacteristicPoint pt, QuadratureSizes q) {
  const double L = pt.eta - pt.xi;
  if (L <= 0.0) return tau(pt.x());
  const double b = p.beta;
  const double l2 = p.lambda2 * L * L;
  const auto& rule = cached_gauss_jacobi(q.jacobi, -b, -b);
  double s = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double z = rule.nodes[k];
    s += rule.weights[k] * even_bessel(-b, l2 * z * (1.0 - z)) * nu(pt.xi + L * z);
  }
  s *= std::pow(L, 1.0 - 2.0 * b);
  return a_minus_general(p, tau, bracket, pt, q) - std::pow(2.0, -2.0 + 4.0 * b) * p.gamma2 * s;
}

double u_cauchy(const ProblemParameters& p, const GridFunction& tau, const GridFunction& nu,
                CharacteristicPoint pt, QuadratureSizes q) {
  const double g = p.gamma_1p_delta;
  return u_cauchy_general(
      p, [&](double t) { return tau(t); }, [&](double t) { return -g * nu(t); },
      [&](double t) { return nu(t); }, pt, q);
}

double tau_from_T(const ProblemParameters& p, const ScalarFn& T, double x, QuadratureSizes q) {
  if (x < 0.0) throw DomainError("tau_from_T: x must be non-negative");
  if (x == 0.0) return 0.0;
  const double b = p.beta;
  const auto& rule = cached_gauss_jacobi(q.jacobi, -2.0 * b, 0.0);
  double s = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double u = rule.nodes[k];
    const double d = x * (1.0 - u);
    s += rule.weights[k] * even_bessel(-b, -p.lambda2 * d * d) * T(x * u);
  }
  return std::pow(x, 1.0 - 2.0 * b) * s;
}

double u_class_R00(const ProblemParameters& p, const ScalarFn& T, const ScalarFn& N,
                   CharacteristicPoint pt, QuadratureSizes q) {
  pt.validate();
  const double b = p.beta;
  const double xi = pt.xi;
  const double eta = pt.eta;

  double first = 0.0;
  if (xi > 0.0) {
    // s = xi u; (xi - s)^{-b} goes into the weight, (eta - s)^{-b} stays smooth
    const auto& rule = cached_gauss_jacobi(q.jacobi, -b, 0.0);
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double s = xi * rule.nodes[k];
      const double a1 = eta - s;
      const double a2 = xi - s;
      first += rule.weights[k] * std::pow(a1, -b) * even_bessel(-b, -p.lambda2 * a1 * a2) * T(s);
    }
    first *= std::pow(xi, 1.0 - b);
  }

  double second = 0.0;
  const double L = eta - xi;
  if (L > 0.0) {
    const auto& rule = cached_gauss_jacobi(q.jacobi, -b, -b);
    const double l2 = p.lambda2 * L * L;
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double z = rule.nodes[k];
      second += rule.weights[k] * even_bessel(-b, l2 * z * (1.0 - z)) * N(xi + L * z);
    }
    second *= std::pow(L, 1.0 - 2.0 * b);
  }
  return first + second;
}

void validate_psi(const ProblemParameters& p, const Polynomial& psi) {
  const auto& c = psi.coeffs();
  const char* names[] = {"psi(0) = 0", "psi'(0) = 0", "psi''(0) = 0"};
  for (std::size_t m = 0; m < 3 && m < c.size(); ++m) {
    if (std::abs(c[m]) > 1e-12) throw ValidationError(std::string("condition violated: ") + names[m]);
  }
  // psi'''(s/2) = s^p psi0(s) with p the lowest power present in psi'''
  const Polynomial d3 = psi.derivative(3);
  const int power = d3.lowest_power();
  if (power >= 0 && !(power > -2.0 - 2.0 * p.beta)) {
    throw ValidationError("condition violated: exponent p of psi''' must exceed -2-2beta");
  }
}

double phi_fn(const ProblemParameters& p, const Polynomial& psi, double t, QuadratureSizes q) {
  validate_psi(p, psi);
  if (t < 0.0) throw DomainError("phi_fn: t must be non-negative");
  if (t == 0.0) return 0.0;
  const double b = p.beta;
  const Polynomial d3 = psi.derivative(3);
  const auto& rz = cached_gauss_jacobi(q.jacobi, 1.0 + b, 0.0);
  auto h = [&](double tau) {
    double s = 0.0;
    for (std::size_t k = 0; k < rz.size(); ++k) s += rz.weights[k] * d3(0.5 * rz.nodes[k] * tau);
    return s;
  };
  const double g = gamma_real(2.0 + b);
  double value = std::pow(t, 2.0 + 2.0 * b) / (8.0 * g) * h(t);
  if (p.lambda2 != 0.0) {
    const auto& rs = cached_gauss_jacobi(q.jacobi, 0.0, 3.0 + b);
    double inner = 0.0;
    for (std::size_t k = 0; k < rs.size(); ++k) {
      const double s = rs.nodes[k];
      inner += rs.weights[k] * even_bessel(1.0, p.lambda2 * t * t * s * (1.0 - s)) * h(t * s);
    }
    value -= p.lambda2 * std::pow(t, 4.0 + 2.0 * b) / (32.0 * g) * inner;
  }
  return value;
}

double phi_operator(const ProblemParameters& p, const Polynomial& psi, double t, PhiVariant variant,
                    int n) {
  validate_psi(p, psi);
  if (t < 0.0) throw DomainError("phi_operator: t must be non-negative");
  if (t == 0.0) return 0.0;
  const double b = p.beta;
  const Polynomial d1 = psi.derivative(1);
  const Polynomial d2 = psi.derivative(2);
  fracops::SmoothFunction f;
  f.value = [&](double s) { return psi(0.5 * s); };
  f.d1 = [&](double s) { return 0.5 * d1(0.5 * s); };
  f.d2 = [&](double s) { return 0.25 * d2(0.5 * s); };
  f.order = 2;
  const fracops::ScalarFn g = [&](double s) { return fracops::rl_derivative_q(1.0 - b, f, s, n); };
  const double l2 = variant == PhiVariant::kALambda ? p.lambda2 : -p.lambda2;
  return std::pow(t, b) * fracops::op_A(0.0, l2, g, t, n);
}

GridFunction T_from_nu(const ProblemParameters& p, const GridFunction& nu, const GridFunction& phi) {
  require_same_grid(nu, phi, "T_from_nu");
  const double c = 2.0 * std::cos(std::numbers::pi * p.beta) / gamma_real(1.0 - p.beta);
  std::vector<double> v(nu.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.gamma3 * nu.values()[i] + c * phi.values()[i];
  return GridFunction(nu.nodes(), std::move(v));
}

GridFunction N_from_T_nu(const ProblemParameters& p, const GridFunction& T, const GridFunction& nu) {
  require_same_grid(T, nu, "N_from_T_nu");
  const double c = 1.0 / (2.0 * std::cos(std::numbers::pi * p.beta));
  const double d = std::pow(4.0, 2.0 * p.beta - 1.0) * p.gamma2;
  std::vector<double> v(T.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * T.values()[i] - d * nu.values()[i];
  return GridFunction(T.nodes(), std::move(v));
}

double tau_relation_14(const ProblemParameters& p, const ScalarFn& nu, const ScalarFn& phi, double x,
                       QuadratureSizes q) {
  const double c = 2.0 * std::cos(std::numbers::pi * p.beta) / gamma_real(1.0 - p.beta);
  return tau_from_T(p, [&](double s) { return p.gamma3 * nu(s) + c * phi(s); }, x, q);
}

}  // namespace tricomi::hyperbolic
