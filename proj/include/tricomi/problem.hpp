#pragma once

#include "tricomi/polynomial.hpp"

namespace tricomi {

/// Equation parameters and the constants derived from them.
///
/// lambda2 is the signed square of the spectral parameter: positive for real
/// lambda, negative for pure imaginary lambda.
struct ProblemParameters {
  double alpha = -0.25;
  double delta = 0.5;
  double lambda2 = 0.0;

  double beta = 0.0;    // alpha - 1/2, in (-1, -1/2)
  double gamma1 = 0.0;  // Gamma(1+2 alpha) / Gamma(1/2+alpha)^2
  double gamma2 = 0.0;  // 2 Gamma(2-2 alpha) / Gamma(3/2-alpha)^2
  double gamma3 = 0.0;  // 2 4^{2 beta-1} gamma2 cos(pi beta)
  double gamma_1p_delta = 0.0;  // Gamma(1+delta), recurring factor
};

/// Validates alpha in (-1/2, 0), delta in (0, 1) and rejects the singular
/// spectral values lambda2 = -(pi n)^2, n = 1, 2, ...
ProblemParameters derive_parameters(double alpha, double delta, double lambda2);

/// True when lambda2 is (to rounding) one of -(pi n)^2.
bool is_singular_spectral_parameter(double lambda2);

/// Data on the boundary of the mixed domain.
///
/// psi is prescribed on the characteristic AC (x in [0, 1/2]). The lateral data
/// are given through the scaled traces trace1(y) = y^{1-delta} phi1(y) on x = 0
/// and trace2(y) = y^{1-delta} phi2(y) on x = 1.
struct BoundaryData {
  Polynomial psi;
  Polynomial trace1;
  Polynomial trace2;
};

}  // namespace tricomi
