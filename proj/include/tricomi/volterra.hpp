#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tricomi/grid_function.hpp"
#include "tricomi/problem.hpp"

// Weakly singular second-kind Volterra equation for nu:
//   nu(x) - c int_0^x (x-s)^sigma k(x-s) nu(s) ds = Q(x)
// with sigma = -2 beta - 2 in (-1, 0) and k(r) = Ibar_{-beta-1}(lambda r).

namespace tricomi::volterra {

using ScalarFn = std::function<double(double)>;

/// Product integration with piecewise-linear nu and exact moments of (x_i - s)^sigma,
/// then forward substitution. grid[0] must be 0 and q.size() == grid.size().
std::vector<double> solve_weakly_singular(std::span<const double> grid, double sigma, double coeff,
                                          const ScalarFn& kernel, std::span<const double> q);

/// Coefficient of the integral term, 2 beta (2 beta + 1) gamma3 / Gamma(1+delta).
double nu_coefficient(const ProblemParameters& p);
/// Coefficient in front of the Q integral, 4 beta (2 beta + 1) cos(pi beta) / (Gamma(1+delta) Gamma(1-beta)).
double q_coefficient(const ProblemParameters& p);

/// Q on `grid`, from Phi evaluated directly at Gauss-Jacobi nodes (no interpolation).
GridFunction assemble_Q(const ProblemParameters& p, const ScalarFn& phi, std::span<const double> grid,
                        int n = 64);

GridFunction solve_volterra_20(const ProblemParameters& p, const GridFunction& Q);

/// sup over `points` of |Gamma(1+delta) int G nu - tau_relation_14(x)|.
double verify_19(const ProblemParameters& p, const ScalarFn& nu, const ScalarFn& phi,
                 std::span<const double> points);

}  // namespace tricomi::volterra
