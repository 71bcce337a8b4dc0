#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tricomi::quadrature {

/// Gauss rule on [0,1] for the weight (1-u)^a u^b.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 0.0;

  std::size_t size() const noexcept { return nodes.size(); }

  /// sum_k w_k f(u_k) ~ int_0^1 (1-u)^a u^b f(u) du
  template <class F>
  double apply(F&& f) const {
    double s = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) s += weights[k] * f(nodes[k]);
    return s;
  }
};

/// n-point Gauss-Legendre rule on [0,1], 1 <= n <= 256.
QuadratureRule gauss_legendre(int n);

/// n-point Gauss-Jacobi rule on [0,1] with weight (1-u)^a u^b, a, b > -1.
/// Nodes come from the eigenvalues of the Jacobi matrix (Golub-Welsch).
QuadratureRule gauss_jacobi(int n, double a, double b);

/// Process-wide memoized rule. The returned reference stays valid for the
/// lifetime of the program; lookups are thread-safe.
const QuadratureRule& cached_gauss_jacobi(int n, double a, double b);
inline const QuadratureRule& cached_gauss_legendre(int n) { return cached_gauss_jacobi(n, 0.0, 0.0); }

/// Lower-triangular product-integration weights on a grid starting at 0:
///   sum_j W[i][j] g(x_j) = int_0^{x_i} (x_i - s)^sigma g_lin(s) ds
/// where g_lin is the piecewise-linear interpolant of g on the grid.
struct TriangularWeights {
  std::vector<double> grid;
  double sigma = 0.0;
  std::vector<std::vector<double>> W;  // row i has i+1 entries

  /// Row i applied to samples g (g.size() >= i+1).
  double apply_row(std::size_t i, std::span<const double> g) const;
};

/// Builds exact local moments of (x_i - s)^sigma against the hat functions.
/// Requires sigma in (-1, 0), grid[0] == 0 and strictly increasing nodes.
TriangularWeights product_weights(std::span<const double> grid, double sigma);

/// int_0^x (x-t)^sigma f(t) dt by the substitution t = x u and a Gauss-Jacobi
/// rule with exponents (sigma, 0). sigma > -1.
double singular_integral(const std::function<double(double)>& f, double x, double sigma, int n = 48);

/// int_lo^hi f(t) dt with the cached n-point Gauss-Legendre rule.
template <class F>
double integrate(F&& f, double lo, double hi, int n = 32) {
  if (hi == lo) return 0.0;
  const auto& rule = cached_gauss_legendre(n);
  const double h = hi - lo;
  double s = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) s += rule.weights[k] * f(lo + h * rule.nodes[k]);
  return h * s;
}

}  // namespace tricomi::quadrature
