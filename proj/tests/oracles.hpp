#pragma once
// Reference computations for the unit tests. Nothing here calls into the library.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// Composite Simpson on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 4000) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// Series of Gamma(g+1) sum (-w/4)^m / (m! Gamma(m+g+1)) in long double, Kahan-summed, with
// each term formed from lgamma instead of a recurrence.
inline double bessel_series(double g, double w, int terms = 400) {
  long double sum = 0.0L, comp = 0.0L;
  const long double lg1 = std::lgamma(static_cast<long double>(g) + 1.0L);
  for (int m = 0; m < terms; ++m) {
    long double mag = m * std::log(std::abs(static_cast<long double>(w)) / 4.0L) -
                      std::lgamma(static_cast<long double>(m) + 1.0L) -
                      std::lgamma(static_cast<long double>(m) + g + 1.0L) + lg1;
    if (w == 0.0) mag = m == 0 ? 0.0L : -1e9L;
    long double sign = 1.0L;
    if (w > 0 && m % 2) sign = -1.0L;
    // g > -1 keeps every Gamma(m+g+1) positive
    const long double t = sign * std::exp(mag) - comp;
    const long double s2 = sum + t;
    comp = (s2 - sum) - t;
    sum = s2;
  }
  return static_cast<double>(sum);
}

// Normalized Bessel functions through the standard library, for g >= 0.
inline double jbar(double g, double z) {
  if (z == 0.0) return 1.0;
  return std::tgamma(g + 1.0) * std::pow(z / 2.0, -g) * std::cyl_bessel_j(g, z);
}
inline double ibar(double g, double z) {
  if (z == 0.0) return 1.0;
  return std::tgamma(g + 1.0) * std::pow(z / 2.0, -g) * std::cyl_bessel_i(g, z);
}

// Negative orders -v, v in (0, 1), through I_{-v} = I_v + (2/pi) sin(v pi) K_v and
// J_{-v} = cos(v pi) J_v - sin(v pi) Y_v. Same sign convention as the library: w = z^2 for J, -z^2 for I.
inline double even_bessel_neg(double v, double w) {
  if (w == 0.0) return 1.0;
  const double z = std::sqrt(std::abs(w));
  const double pre = std::tgamma(1.0 - v) * std::pow(z / 2.0, v);
  if (w < 0.0) {
    return pre * (std::cyl_bessel_i(v, z) + 2.0 / std::numbers::pi * std::sin(v * std::numbers::pi) * std::cyl_bessel_k(v, z));
  }
  return pre * (std::cos(v * std::numbers::pi) * std::cyl_bessel_j(v, z) - std::sin(v * std::numbers::pi) * std::cyl_neumann(v, z));
}

// J0(lambda sqrt(w)) for the signed quantity lambda2 * w.
inline double j0_signed(double lw) {
  return lw >= 0.0 ? std::cyl_bessel_j(0.0, std::sqrt(lw)) : std::cyl_bessel_i(0.0, std::sqrt(-lw));
}

// int_0^x (x-t)^sigma f(t) dt for smooth f and sigma > -1. With x - t = x r^{1/(sigma+1)} the
// weight becomes the constant x^{sigma+1}/(sigma+1); the integrand in r is smooth when
// 1/(sigma+1) is an integer.
inline double weakly_singular(const std::function<double(double)>& f, double x, double sigma, int n = 20000) {
  if (x == 0.0) return 0.0;
  const double e = 1.0 / (sigma + 1.0);
  return std::pow(x, sigma + 1.0) * e * simpson([&](double r) { return f(x - x * std::pow(r, e)); }, 0.0, 1.0, n);
}

}  // namespace oracle
