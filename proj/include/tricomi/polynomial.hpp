#pragma once

#include <cstddef>
#include <vector>

namespace tricomi {

/// p(x) = c[0] + c[1] x + ... + c[n] x^n
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

  const std::vector<double>& coeffs() const noexcept { return c_; }
  std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }

  double operator()(double x) const noexcept {
    double s = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
  }

  Polynomial derivative(int order = 1) const {
    std::vector<double> d = c_;
    for (int k = 0; k < order; ++k) {
      if (d.size() <= 1) return Polynomial();
      std::vector<double> next(d.size() - 1);
      for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] = d[i] * static_cast<double>(i);
      d = std::move(next);
    }
    return Polynomial(std::move(d));
  }

  bool is_zero() const noexcept {
    for (double v : c_) {
      if (v != 0.0) return false;
    }
    return true;
  }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int lowest_power() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0.0) return static_cast<int>(i);
    }
    return -1;
  }

 private:
  std::vector<double> c_;
};

}  // namespace tricomi
