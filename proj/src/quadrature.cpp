#include "tricomi/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "tricomi/error.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::quadrature {

QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 256) throw DomainError("gauss_legendre: n must be in [1, 256]");
  return gauss_jacobi(n, 0.0, 0.0);
}

QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_jacobi: n must be positive");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw DomainError("gauss_jacobi: exponents must exceed -1 (a = " + std::to_string(a) +
                      ", b = " + std::to_string(b) + ")");
  }

  // Jacobi matrix of the monic recurrence for (1-x)^a (1+x)^b on [-1,1].
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta;
    if (k == 1) {
      // (k+a+b)/(2k+a+b-1) cancels analytically; keeps a+b = -1 finite.
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off(k - 1) = std::sqrt(beta);
  }

  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mass = specfun::beta_fn(a + 1.0, b + 1.0);
  if (n == 1) {
    rule.nodes[0] = 0.5 * (1.0 + diag(0));
    rule.weights[0] = mass;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) throw ConvergenceError("gauss_jacobi: eigen-solver failed");
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = 0.5 * (1.0 + eig.eigenvalues()(k));
    const double v0 = eig.eigenvectors()(0, k);
    rule.weights[k] = mass * v0 * v0;
  }
  return rule;
}

const QuadratureRule& cached_gauss_jacobi(int n, double a, double b) {
  using Key = std::tuple<int, double, double>;
  static std::shared_mutex mutex;
  static std::map<Key, std::unique_ptr<QuadratureRule>> cache;
  const Key key{n, a, b};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto rule = std::make_unique<QuadratureRule>(gauss_jacobi(n, a, b));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(rule));
  return *it->second;
}

double TriangularWeights::apply_row(std::size_t i, std::span<const double> g) const {
  const auto& row = W.at(i);
  double s = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * g[j];
  return s;
}

TriangularWeights product_weights(std::span<const double> grid, double sigma) {
  if (!(sigma > -1.0 && sigma < 0.0)) {
    throw DomainError("product_weights: sigma must lie in (-1, 0)");
  }
  if (grid.empty() || grid.front() != 0.0) {
    throw DomainError("product_weights: grid must start at 0");
  }
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (!(grid[j] > grid[j - 1])) throw DomainError("product_weights: grid must be strictly increasing");
  }

  TriangularWeights tw;
  tw.grid.assign(grid.begin(), grid.end());
  tw.sigma = sigma;
  tw.W.resize(grid.size());
  const double p1 = sigma + 1.0;
  const double p2 = sigma + 2.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto& row = tw.W[i];
    row.assign(i + 1, 0.0);
    const double xi = grid[i];
    for (std::size_t j = 0; j < i; ++j) {
      const double dl = xi - grid[j];      // distance to the left end of the cell
      const double dr = xi - grid[j + 1];  // distance to the right end
      const double h = grid[j + 1] - grid[j];
      // M0 = int (x_i - s)^sigma ds, M1 = int (x_i - s)^{sigma+1} ds over the cell.
      const double m0 = (std::pow(dl, p1) - std::pow(dr, p1)) / p1;
      const double m1 = (std::pow(dl, p2) - std::pow(dr, p2)) / p2;
      row[j] += (m1 - dr * m0) / h;
      row[j + 1] += (dl * m0 - m1) / h;
    }
  }
  return tw;
}

double singular_integral(const std::function<double(double)>& f, double x, double sigma, int n) {
  if (x == 0.0) return 0.0;
  const auto& rule = cached_gauss_jacobi(n, sigma, 0.0);
  double s = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) s += rule.weights[k] * f(x * rule.nodes[k]);
  return std::pow(x, sigma + 1.0) * s;
}

}  // namespace tricomi::quadrature
