#pragma once

#include <functional>

#include "tricomi/grid_function.hpp"
#include "tricomi/problem.hpp"

// The two-point problem tau'' - lambda^2 tau = Gamma(1+delta) nu, tau(0) = a, tau(1) = b.

namespace tricomi::ode_bvp {

struct BvpData {
  double a = 0.0;
  double b = 0.0;
};

/// sinh(lambda u)/lambda written through lambda2 (sin(mu u)/mu when lambda2 = -mu^2).
/// Uses the even power series while |lambda2 u^2| < kSeriesThreshold.
double S(double lambda2, double u);
inline constexpr double kSeriesThreshold = 1.0;

/// Symmetric Dirichlet Green's function of d^2/dx^2 - lambda^2 on [0,1]:
/// G = S(x_<) S(x_> - 1) / S(1).
double green_G(const ProblemParameters& p, double x, double t);

/// tau = a + x(b-a) + lambda^2 int G [a + t(b-a)] dt + Gamma(1+delta) int G nu dt, on nu's grid.
GridFunction solve_bvp_17(const ProblemParameters& p, BvpData bvp, const GridFunction& nu);

/// solve_bvp_17 with a = b = 0.
GridFunction tau_from_nu_18(const ProblemParameters& p, const GridFunction& nu);

/// Gamma(1+delta) int_0^1 G(x,t) nu(t) dt by direct Gauss-Legendre on [0,x] and [x,1].
double green_integral(const ProblemParameters& p, const std::function<double(double)>& nu, double x,
                      int n = 64);

}  // namespace tricomi::ode_bvp
