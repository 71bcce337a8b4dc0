#pragma once

// Series-based special functions used by the kernels of the mixed problem.
//
// Bessel-type kernels are evaluated in squared-argument form: every kernel in
// the solver depends on the spectral parameter only through lambda^2, so
//
//   Jbar_g(z) = even_bessel(g,  z*z)     (normalized Bessel J)
//   Ibar_g(z) = even_bessel(g, -z*z)     (normalized modified Bessel I)
//
// and a pure imaginary lambda is simply a negative lambda2. No complex
// arithmetic is needed anywhere in the pipeline.

namespace tricomi::specfun {

struct SeriesTolerance {
  double rel_tol = 1e-14;
  int max_terms = 200;

  void validate() const;
};

/// Gamma function for real arguments. Throws PoleError at 0, -1, -2, ...
double gamma_real(double x);

/// 1/Gamma(x); exactly zero at the poles of Gamma.
double recip_gamma(double x) noexcept;

/// Euler Beta function B(a, b) for a, b > 0.
double beta_fn(double a, double b);

/// Gamma(g+1) * sum_m (-w/4)^m / (m! Gamma(m+g+1)).
///
/// Summed through the term recurrence
///   t_{m+1} = t_m * (-w/4) / ((m+1)(m+g+1)),  t_0 = 1,
/// so no gamma values are formed. g must not be a negative integer.
/// Throws ConvergenceError when max_terms is exhausted.
double even_bessel(double g, double w, const SeriesTolerance& tol = {});

/// Wright-type series e^{mu,delta}_{a,b}(z) = sum_k z^k / (Gamma(mu + a k) Gamma(delta - b k)),
/// defined for a > b. Pole terms vanish through recip_gamma.
double wright_e(double mu, double delta, double a, double b, double z,
                const SeriesTolerance& tol = {});

}  // namespace tricomi::specfun
