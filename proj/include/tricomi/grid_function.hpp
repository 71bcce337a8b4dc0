#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tricomi {

/// A real function sampled on strictly increasing nodes in [0,1].
///
/// Between nodes it is evaluated by cubic Lagrange interpolation through the
/// four nearest nodes (three or two on very short grids). Every quadrature
/// that consumes GridFunction data goes through this interpolant.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(std::vector<double> nodes, std::vector<double> values);

  template <class F>
  static GridFunction sample(std::span<const double> nodes, F&& f) {
    std::vector<double> v(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) v[i] = f(nodes[i]);
    return GridFunction({nodes.begin(), nodes.end()}, std::move(v));
  }

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  double operator()(double x) const;

  /// True when both functions live on the same node set (bitwise).
  bool same_grid(const GridFunction& other) const noexcept { return nodes_ == other.nodes_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
};

/// n equally spaced nodes on [lo, hi], endpoints included.
std::vector<double> uniform_grid(std::size_t n, double lo = 0.0, double hi = 1.0);

/// Throws DomainError naming `what` if the grids differ.
void require_same_grid(const GridFunction& a, const GridFunction& b, const std::string& what);

}  // namespace tricomi
