#include "tricomi/ode_bvp.hpp"

#include <algorithm>
#include <cmath>

#include "tricomi/error.hpp"
#include "tricomi/quadrature.hpp"

namespace tricomi::ode_bvp {

double S(double lambda2, double u) {
  const double w = lambda2 * u * u;
  if (std::abs(w) < kSeriesThreshold) {
    // u * sum w^k / (2k+1)!
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 30; ++k) {
      term *= w / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return u * sum;
  }
  if (lambda2 > 0.0) {
    const double l = std::sqrt(lambda2);
    return std::sinh(l * u) / l;
  }
  const double mu = std::sqrt(-lambda2);
  return std::sin(mu * u) / mu;
}

double green_G(const ProblemParameters& p, double x, double t) {
  const double s1 = S(p.lambda2, 1.0);
  if (s1 == 0.0) throw PoleError("green_G: singular spectral parameter");
  const double lo = std::min(x, t);
  const double hi = std::max(x, t);
  return S(p.lambda2, lo) * S(p.lambda2, hi - 1.0) / s1;
}

GridFunction solve_bvp_17(const ProblemParameters& p, BvpData bvp, const GridFunction& nu) {
  const auto& x = nu.nodes();
  const std::size_t n = x.size();
  const double l2 = p.lambda2;
  const double s1 = S(l2, 1.0);
  if (s1 == 0.0) throw PoleError("solve_bvp_17: singular spectral parameter");
  if (x.front() != 0.0 || x.back() != 1.0) throw DomainError("solve_bvp_17: grid must span [0, 1]");

  // f(t) = lambda^2 (a + t(b-a)) + Gamma(1+delta) nu(t) and
  // int_0^1 G f = [S(x-1) int_0^x S(t) f + S(x) int_x^1 S(t-1) f] / S(1).
  auto f = [&](double t) { return l2 * (bvp.a + t * (bvp.b - bvp.a)) + p.gamma_1p_delta * nu(t); };

  std::vector<double> left(n, 0.0);
  std::vector<double> right(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    left[i + 1] = left[i] + quadrature::integrate([&](double t) { return S(l2, t) * f(t); }, x[i],
                                                  x[i + 1], 8);
  }
  for (std::size_t i = n - 1; i > 0; --i) {
    right[i - 1] = right[i] + quadrature::integrate([&](double t) { return S(l2, t - 1.0) * f(t); },
                                                    x[i - 1], x[i], 8);
  }

  std::vector<double> tau(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double g = (S(l2, x[i] - 1.0) * left[i] + S(l2, x[i]) * right[i]) / s1;
    tau[i] = bvp.a + x[i] * (bvp.b - bvp.a) + g;
  }
  // boundary values hold exactly
  tau.front() = bvp.a;
  tau.back() = bvp.b;
  return GridFunction(x, std::move(tau));
}

GridFunction tau_from_nu_18(const ProblemParameters& p, const GridFunction& nu) {
  return solve_bvp_17(p, BvpData{}, nu);
}

double green_integral(const ProblemParameters& p, const std::function<double(double)>& nu, double x,
                      int n) {
  auto g = [&](double t) { return green_G(p, x, t) * nu(t); };
  return p.gamma_1p_delta * (quadrature::integrate(g, 0.0, x, n) + quadrature::integrate(g, x, 1.0, n));
}

}  // namespace tricomi::ode_bvp
