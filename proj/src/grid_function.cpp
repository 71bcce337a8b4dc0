#include "tricomi/grid_function.hpp"

#include <algorithm>

#include "tricomi/error.hpp"

namespace tricomi {

GridFunction::GridFunction(std::vector<double> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.size() != values_.size()) {
    throw DomainError("GridFunction: nodes and values differ in length");
  }
  if (nodes_.empty()) throw DomainError("GridFunction: empty grid");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > nodes_[i - 1])) throw DomainError("GridFunction: nodes must be strictly increasing");
  }
}

double GridFunction::operator()(double x) const {
  const std::size_t n = nodes_.size();
  if (n == 1) return values_[0];

  // Cell containing x, clamped to the grid.
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  std::ptrdiff_t cell = std::distance(nodes_.begin(), it) - 1;
  cell = std::clamp<std::ptrdiff_t>(cell, 0, static_cast<std::ptrdiff_t>(n) - 2);
  if (x == nodes_[cell]) return values_[cell];
  if (x == nodes_[cell + 1]) return values_[cell + 1];

  const std::ptrdiff_t width = std::min<std::ptrdiff_t>(4, static_cast<std::ptrdiff_t>(n));
  std::ptrdiff_t first = cell - (width / 2 - 1);
  first = std::clamp<std::ptrdiff_t>(first, 0, static_cast<std::ptrdiff_t>(n) - width);

  double result = 0.0;
  for (std::ptrdiff_t j = first; j < first + width; ++j) {
    double basis = 1.0;
    for (std::ptrdiff_t k = first; k < first + width; ++k) {
      if (k != j) basis *= (x - nodes_[k]) / (nodes_[j] - nodes_[k]);
    }
    result += basis * values_[j];
  }
  return result;
}

std::vector<double> uniform_grid(std::size_t n, double lo, double hi) {
  if (n < 2) throw DomainError("uniform_grid: need at least two nodes");
  std::vector<double> g(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + h * static_cast<double>(i);
  g.back() = hi;
  return g;
}

void require_same_grid(const GridFunction& a, const GridFunction& b, const std::string& what) {
  if (!a.same_grid(b)) throw DomainError(what + ": grid mismatch");
}

}  // namespace tricomi
