#include "tricomi/problem.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tricomi/error.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi {

bool is_singular_spectral_parameter(double lambda2) {
  if (!(lambda2 < 0.0)) return false;
  const double n = std::sqrt(-lambda2) / std::numbers::pi;
  const double nearest = std::nearbyint(n);
  return nearest >= 1.0 && std::abs(n - nearest) <= 1e-10 * nearest;
}

ProblemParameters derive_parameters(double alpha, double delta, double lambda2) {
  if (!(alpha > -0.5 && alpha < 0.0)) {
    throw ValidationError("alpha must lie in (-1/2, 0), got " + std::to_string(alpha));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("delta must lie in (0, 1), got " + std::to_string(delta));
  }
  if (!std::isfinite(lambda2)) throw ValidationError("lambda2 must be finite");
  if (is_singular_spectral_parameter(lambda2)) {
    throw ValidationError("singular spectral parameter: lambda = i pi n (lambda2 = " +
                          std::to_string(lambda2) + ")");
  }

  using specfun::gamma_real;
  ProblemParameters p;
  p.alpha = alpha;
  p.delta = delta;
  p.lambda2 = lambda2;
  p.beta = alpha - 0.5;
  const double g_half = gamma_real(0.5 + alpha);
  p.gamma1 = gamma_real(1.0 + 2.0 * alpha) / (g_half * g_half);
  const double g_3half = gamma_real(1.5 - alpha);
  p.gamma2 = 2.0 * gamma_real(2.0 - 2.0 * alpha) / (g_3half * g_3half);
  p.gamma3 = 2.0 * std::pow(4.0, 2.0 * p.beta - 1.0) * p.gamma2 * std::cos(std::numbers::pi * p.beta);
  p.gamma_1p_delta = gamma_real(1.0 + delta);
  return p;
}

}  // namespace tricomi
