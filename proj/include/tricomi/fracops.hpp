#pragma once

#include <functional>

#include "tricomi/polynomial.hpp"

// Riemann-Liouville operators and the Bessel-kernel operators A and B.
//
//   A_k[g](x) = g(x) - int_k^x g(t) (t-k)/(x-k) d/dt J0[lambda sqrt((x-k)(x-t))] dt
//   B_k[g](x) = g(x) + int_k^x g(t) d/dx J0[lambda sqrt((k-t)(x-t))] dt
//
// Both kernel derivatives are taken analytically with
// d/dw even_bessel(0, w) = -even_bessel(1, w) / 4, which gives
//
//   A_k[g](x) = g(x) - lambda2/4 int_k^x g(t) (t-k) Jbar_1(lambda2 (x-k)(x-t)) dt
//   B_k[g](x) = g(x) - lambda2/4 int_k^x g(t) (k-t) Jbar_1(lambda2 (k-t)(x-t)) dt
//
// The "i lambda" variants are the same calls with lambda2 negated.

namespace tricomi::fracops {

using ScalarFn = std::function<double(double)>;

/// A function on [0,1] with optionally declared derivatives.
struct SmoothFunction {
  ScalarFn value;
  ScalarFn d1;
  ScalarFn d2;
  ScalarFn d3;
  int order = 0;  // highest declared derivative

  double operator()(double x) const { return value(x); }

  static SmoothFunction from_callable(ScalarFn f);
  static SmoothFunction from_polynomial(const Polynomial& p);
};

/// (1/Gamma(mu)) int_0^x (x-t)^{mu-1} f(t) dt, mu > 0.
double rl_integral(double mu, const ScalarFn& f, double x, int n = 32);

/// Riemann-Liouville derivative of order q in (1,2) for f with f(0) = f'(0) = 0,
/// computed as rl_integral(2-q, f'').
double rl_derivative_q(double q, const SmoothFunction& f, double x, int n = 32);

double op_A(double k, double lambda2, const ScalarFn& g, double x, int n = 32);
double op_B(double k, double lambda2, const ScalarFn& g, double x, int n = 32);

/// int_0^x (x-t)^{-beta} Jbar_{-beta}[lambda sqrt(t(x-t))] g(t) dt, beta < 1.
double lemma1_lhs(double beta, double lambda2, const ScalarFn& g, double x, int n = 32);

/// Gamma(1-beta) D^{beta-1}_{0x} B_{0x}^{i lambda}[g](x); the order beta-1 < 0
/// makes D^{beta-1} a fractional integral of order 1-beta.
double lemma1_rhs(double beta, double lambda2, const ScalarFn& g, double x, int n = 32);

}  // namespace tricomi::fracops
