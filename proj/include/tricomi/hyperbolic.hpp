#pragma once

#include <functional>

#include "tricomi/grid_function.hpp"
#include "tricomi/problem.hpp"

// Solution machinery in the hyperbolic half y < 0 of the mixed domain.

namespace tricomi::hyperbolic {

using ScalarFn = std::function<double(double)>;

/// Characteristic coordinates xi = x - 2 sqrt(-y), eta = x + 2 sqrt(-y).
struct CharacteristicPoint {
  double xi = 0.0;
  double eta = 0.0;

  double x() const noexcept { return 0.5 * (xi + eta); }
  double y() const noexcept {
    const double q = 0.25 * (eta - xi);
    return -q * q;
  }
  static CharacteristicPoint from_xy(double x, double y);
  /// Throws DomainError unless 0 <= xi <= eta <= 1.
  void validate() const;
};

struct QuadratureSizes {
  int jacobi = 32;
};

// --- the correction term A_alpha^- --------------------------------------------------------------

/// Characteristic form of A_alpha^-(tau, lambda). `bracket` is lambda^2 tau(t) - tau''(t).
/// At xi == eta the value is the continuity limit tau(x).
double a_minus_general(const ProblemParameters& p, const ScalarFn& tau, const ScalarFn& bracket,
                       CharacteristicPoint pt, QuadratureSizes q = {});

/// Same quantity in the (x, y) form with the z-substitution zeta = x - 2 sqrt(-y)(1-2z).
double a_minus_xy(const ProblemParameters& p, const ScalarFn& tau, const ScalarFn& bracket, double x,
                  double y, QuadratureSizes q = {});

/// A_alpha^- for a trace pair obeying tau'' = lambda^2 tau + Gamma(1+delta) nu, so the bracket
/// is -Gamma(1+delta) nu(t) and tau'' is never differentiated numerically.
double a_minus(const ProblemParameters& p, const GridFunction& tau, const GridFunction& nu,
               CharacteristicPoint pt, QuadratureSizes q = {});

// --- modified Cauchy problem and the class R00 representation ---------------------------------

/// u = A_alpha^- - 2^{-2+4 beta} gamma2 int_xi^eta (eta-t)^{-beta} (t-xi)^{-beta} Jbar_{-beta}(sigma) nu dt
double u_cauchy_general(const ProblemParameters& p, const ScalarFn& tau, const ScalarFn& bracket,
                        const ScalarFn& nu, CharacteristicPoint pt, QuadratureSizes q = {});

double u_cauchy(const ProblemParameters& p, const GridFunction& tau, const GridFunction& nu,
                CharacteristicPoint pt, QuadratureSizes q = {});

/// tau(x) = int_0^x (x-s)^{-2 beta} Ibar_{-beta}[lambda (x-s)] T(s) ds
double tau_from_T(const ProblemParameters& p, const ScalarFn& T, double x, QuadratureSizes q = {});

/// Class R00 solution: a T-integral over [0, xi] and an N-integral over [xi, eta].
double u_class_R00(const ProblemParameters& p, const ScalarFn& T, const ScalarFn& N,
                   CharacteristicPoint pt, QuadratureSizes q = {});

// --- boundary-data transforms --------------------------------------------------------------------

/// Checks psi(0) = psi'(0) = psi''(0) = 0 and the exponent condition on psi'''.
/// Throws ValidationError naming the violated condition.
void validate_psi(const ProblemParameters& p, const Polynomial& psi);

/// The expanded closed form of Phi(t) in terms of psi''' (two nested integrals).
double phi_fn(const ProblemParameters& p, const Polynomial& psi, double t, QuadratureSizes q = {});

/// Which spectral sign the A-operator in the operator form of Phi carries.
enum class PhiVariant { kALambda, kAILambda };

/// Operator form Phi(t) = t^beta A_{0t}[D^{1-beta}_{0t} psi(t/2)] with A = A^{1,lambda} or
/// A^{1,i lambda}. The i-lambda variant is the one consistent with the AC boundary condition.
double phi_operator(const ProblemParameters& p, const Polynomial& psi, double t, PhiVariant variant,
                    int n = 32);

/// T = gamma3 nu + (2 cos(pi beta) / Gamma(1-beta)) Phi, pointwise.
GridFunction T_from_nu(const ProblemParameters& p, const GridFunction& nu, const GridFunction& phi);

/// N = T / (2 cos(pi beta)) - 4^{2 beta - 1} gamma2 nu, pointwise.
GridFunction N_from_T_nu(const ProblemParameters& p, const GridFunction& T, const GridFunction& nu);

/// Right-hand side of the hyperbolic-side trace relation at x: tau_from_T applied to
/// gamma3 nu + (2 cos(pi beta)/Gamma(1-beta)) Phi.
double tau_relation_14(const ProblemParameters& p, const ScalarFn& nu, const ScalarFn& phi, double x,
                       QuadratureSizes q = {});

}  // namespace tricomi::hyperbolic
