#include "tricomi/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "tricomi/error.hpp"
#include "tricomi/quadrature.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::parabolic {

namespace {

// Below this |w| the J0 series is summed directly; above it the alternating series
// loses digits, so the standard library Bessel functions take over.
constexpr double kSeriesLimit = 25.0;

double j0_squared(double w) {
  if (std::abs(w) < kSeriesLimit) return specfun::even_bessel(0.0, w);
  if (w > 0.0) return std::cyl_bessel_j(0.0, std::sqrt(w));
  return std::cyl_bessel_i(0.0, std::sqrt(-w));
}

// Lagrange interpolation through `width` consecutive samples of a uniform table.
double lagrange_uniform(const std::vector<double>& v, double step, double x, std::ptrdiff_t width) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  width = std::min(width, n);
  const double pos = x / step;
  auto k = static_cast<std::ptrdiff_t>(std::floor(pos));
  std::ptrdiff_t first = std::clamp<std::ptrdiff_t>(k - (width / 2 - 1), 0, n - width);
  const double s = pos - static_cast<double>(first);
  double result = 0.0;
  for (std::ptrdiff_t j = 0; j < width; ++j) {
    double basis = 1.0;
    for (std::ptrdiff_t m = 0; m < width; ++m) {
      if (m != j) basis *= (s - static_cast<double>(m)) / static_cast<double>(j - m);
    }
    result += basis * v[first + j];
  }
  return result;
}

}  // namespace

// ---- WrightKernel ----

WrightKernel::WrightKernel(double beta) : beta_(beta), step_(1.0 / 128.0) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("WrightKernel: beta must lie in (0, 1)");
  // phi(r)/r -> -1/Gamma(-beta) > 0 as r -> 0
  log_ratio_.push_back(std::log(-specfun::recip_gamma(-beta)));
  for (int k = 1;; ++k) {
    const double r = step_ * k;
    const double v = direct(r);
    if (!(v > 1e-300)) break;
    log_ratio_.push_back(std::log(v / r));
    if (k > 1'000'000) throw ConvergenceError("WrightKernel: table does not terminate");
  }
  cutoff_ = step_ * static_cast<double>(log_ratio_.size() - 1);
}

double WrightKernel::direct(double r) const {
  if (r < 0.0) throw DomainError("WrightKernel: r must be non-negative");
  if (r <= 1.0) return specfun::wright_e(1.0, 0.0, 1.0, beta_, -r);

  // Hankel contour s(theta) = S (theta cot theta + i theta); phi = (1/pi) int_0^pi Im[e^{s - r s^beta} s'] dtheta
  const double S = std::max(std::pow(r * beta_, 1.0 / (1.0 - beta_)), 1.0);
  const auto& rule = quadrature::cached_gauss_legendre(64);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double th = std::numbers::pi * rule.nodes[k];
    const double sn = std::sin(th);
    const double ct = std::cos(th) / sn;
    const std::complex<double> s(S * th * ct, S * th);
    const std::complex<double> ds(S * (ct - th / (sn * sn)), S);
    sum += rule.weights[k] * (std::exp(s - r * std::pow(s, beta_)) * ds).imag();
  }
  return sum;
}

double WrightKernel::operator()(double r) const {
  if (r < 0.0) throw DomainError("WrightKernel: r must be non-negative");
  if (r >= cutoff_) return 0.0;
  return r * std::exp(lagrange_uniform(log_ratio_, step_, r, 4));
}

const WrightKernel& WrightKernel::shared(double beta) {
  static std::mutex mu;
  static std::map<double, std::unique_ptr<WrightKernel>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[beta];
  if (!slot) slot = std::make_unique<WrightKernel>(beta);
  return *slot;
}

// ---- Gamma and G ----

FundamentalSolution::FundamentalSolution(double delta, double lambda2)
    : delta_(delta), lambda2_(lambda2) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("FundamentalSolution: delta must lie in (0, 1]");
  phi_ = &WrightKernel::shared(0.5 * delta);
}

double FundamentalSolution::operator()(double x, double y) const {
  if (!(y > 0.0)) throw DomainError("gamma_fundamental: y must be positive");
  const double yb = std::pow(y, 0.5 * delta_);
  const double a = std::abs(x);
  const double r0 = a / yb;
  const double scale = yb / (2.0 * y);
  const auto& rule = quadrature::cached_gauss_legendre(16);

  // xi = |x| + y^{delta/2} rho, unit panels in rho
  double total = 0.0;
  double prev = INFINITY;
  int quiet = 0;
  constexpr int kPanelCap = 200000;
  for (int k = 0; k < kPanelCap; ++k) {
    double c = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const double rho = k + rule.nodes[j];
      const double ph = (*phi_)(r0 + rho);
      if (ph == 0.0) continue;
      const double d = yb * rho;
      const double kern = lambda2_ == 0.0 ? 1.0 : j0_squared(lambda2_ * d * (2.0 * a + d));
      c += rule.weights[j] * ph * kern;
    }
    c *= scale;
    total += c;
    if (r0 + k + 1 >= phi_->cutoff()) return total;
    quiet = (std::abs(c) < 1e-14 && std::abs(c) <= prev) ? quiet + 1 : 0;
    prev = std::abs(c);
    if (quiet >= 3) return total;
  }
  throw ConvergenceError("gamma_fundamental: integrand does not decay (x = " + std::to_string(x) +
                         ", y = " + std::to_string(y) + ")");
}

double gamma_fundamental(const ProblemParameters& p, double x, double y) {
  return FundamentalSolution(p.delta, p.lambda2)(x, y);
}

double green_parabolic(const FundamentalSolution& g, double x, double y, double t, double s, int M) {
  if (M < 1) throw DomainError("green_parabolic: M must be positive");
  const double tau = y - s;
  if (!(tau > 0.0)) throw DomainError("green_parabolic: requires y > s");
  double sum = 0.0;
  double edge = 0.0;
  for (int m = -M; m <= M; ++m) {
    const double term = g(x - t + 2.0 * m, tau) - g(x + t + 2.0 * m, tau);
    sum += term;
    if (m == -M || m == M) edge = std::max(edge, std::abs(term));
  }
  if (edge >= 1e-14) {
    throw ConvergenceError("green_parabolic: lattice sum not converged at M = " + std::to_string(M));
  }
  return sum;
}

double green_parabolic(const ProblemParameters& p, double x, double y, double t, double s, int M) {
  return green_parabolic(FundamentalSolution(p.delta, p.lambda2), x, y, t, s, M);
}

// ---- Omega1Evaluator ----

Omega1Evaluator::Omega1Evaluator(const ProblemParameters& p, GridFunction tau, BoundaryData traces,
                                 Omega1Options opt)
    : p_(p),
      tau_(std::move(tau)),
      traces_(std::move(traces)),
      opt_(opt),
      gamma_(p.delta, p.lambda2),
      gamma_delta_(specfun::gamma_real(p.delta)) {
  for (const auto* tr : {&traces_.trace1, &traces_.trace2}) {
    if (!tr->coeffs().empty() && std::abs(tr->coeffs()[0]) > 1e-12) {
      throw ValidationError("scaled traces must vanish at y = 0");
    }
  }
}

double Omega1Evaluator::Table::operator()(double z) const {
  const double a = std::abs(z);
  if (a > reach()) return 0.0;
  return lagrange_uniform(values, step, a, 6);
}

const Omega1Evaluator::Table& Omega1Evaluator::table(double y) const {
  std::lock_guard lock(mu_);
  auto it = tables_.find(y);
  if (it != tables_.end()) return *it->second;
  if (tables_.size() > 8192) tables_.clear();

  auto tab = std::make_unique<Table>();
  tab->step = std::pow(y, 0.5 * p_.delta) / opt_.table_density;
  const double g0 = gamma_(0.0, y);
  tab->values.push_back(g0);
  int quiet = 0;
  for (int k = 1;; ++k) {
    const double v = gamma_(tab->step * k, y);
    tab->values.push_back(v);
    quiet = std::abs(v) < 1e-17 * std::abs(g0) ? quiet + 1 : 0;
    if (quiet >= 3 && k >= 6) break;
    if (k > 2'000'000) throw ConvergenceError("Gamma table does not terminate");
  }
  return *tables_.emplace(y, std::move(tab)).first->second;
}

double Omega1Evaluator::green_from_table(const Table& tab, double x, double t) const {
  const double reach = tab.reach();
  double sum = 0.0;
  const double d = x - t;
  for (auto m = static_cast<long>(std::ceil((-reach - d) / 2.0)); 2.0 * m + d <= reach; ++m) {
    sum += tab(d + 2.0 * m);
  }
  const double e = x + t;
  for (auto m = static_cast<long>(std::ceil((-reach - e) / 2.0)); 2.0 * m + e <= reach; ++m) {
    sum -= tab(e + 2.0 * m);
  }
  return sum;
}

double Omega1Evaluator::initial_term(double x, double y) const {
  const Table& tab = table(y);
  auto f = [&](double t) { return tau_(t) * green_from_table(tab, x, t); };
  const int n = opt_.t_nodes;
  return gamma_delta_ * (quadrature::integrate(f, 0.0, x, n) + quadrature::integrate(f, x, 1.0, n));
}

double Omega1Evaluator::lateral_terms(double x, double y) const {
  if (traces_.trace1.is_zero() && traces_.trace2.is_zero()) return 0.0;
  const double h = opt_.fd_step;
  auto green_auto = [&](double t, double s) {
    for (int M = 2;; M *= 2) {
      try {
        return green_parabolic(gamma_, x, y, t, s, M);
      } catch (const ConvergenceError&) {
        if (M > 4096) throw;
      }
    }
  };
  auto g_t = [&](double t0, double s) { return (green_auto(t0 + h, s) - green_auto(t0 - h, s)) / (2.0 * h); };

  // s = y v, phi_i(s) ds = trace_i(y v) y^{delta-1} v^{delta-1} y dv
  const auto& rule = quadrature::cached_gauss_jacobi(opt_.trace_nodes, 0.0, p_.delta - 1.0);
  const double scale = std::pow(y, p_.delta);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double s = y * rule.nodes[k];
    double v = 0.0;
    if (!traces_.trace1.is_zero()) v += traces_.trace1(s) * g_t(0.0, s);
    if (!traces_.trace2.is_zero()) v -= traces_.trace2(s) * g_t(1.0, s);
    sum += rule.weights[k] * v;
  }
  return scale * sum;
}

double Omega1Evaluator::u(double x, double y) const {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("u_omega1: x outside [0, 1]");
  if (!(y >= opt_.y_floor)) {
    throw DomainError("u_omega1: y below the floor " + std::to_string(opt_.y_floor) +
                      "; use the scaled trace there");
  }
  return initial_term(x, y) + lateral_terms(x, y);
}

double Omega1Evaluator::w(double x, double y) const {
  if (y < opt_.y_floor) return tau_(x);
  return std::pow(y, 1.0 - p_.delta) * u(x, y);
}

double pde_residual_omega1(const Omega1Evaluator& ev, double x, double y, double h, int n) {
  if (!(h > 0.0) || x - h < 0.0 || x + h > 1.0 || y - h <= 0.0) {
    throw DomainError("pde_residual_omega1: stencil leaves the domain");
  }
  const double delta = ev.params().delta;
  const double u0 = ev.u(x, y);
  const double uxx = (ev.u(x + h, y) - 2.0 * u0 + ev.u(x - h, y)) / (h * h);

  // I^{1-delta} u(yy) = 1/(delta Gamma(1-delta)) int_0^1 (1-q)^{-delta} r(q)^{-delta} w(x, yy q^{1/delta}) dq
  // with r(q) = (1 - q^{1/delta}) / (1 - q)
  const auto& rule = quadrature::cached_gauss_jacobi(n, -delta, 0.0);
  const double c = 1.0 / (delta * specfun::gamma_real(1.0 - delta));
  auto frac_integral = [&](double yy) {
    double s = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double q = rule.nodes[k];
      const double lq = std::log(q) / delta;
      const double r = -std::expm1(lq) / (1.0 - q);
      s += rule.weights[k] * std::pow(r, -delta) * ev.w(x, yy * std::exp(lq));
    }
    return c * s;
  };
  const double d_delta = (frac_integral(y + h) - frac_integral(y - h)) / (2.0 * h);
  return std::abs(uxx - d_delta - ev.params().lambda2 * u0);
}

double extrapolated_trace(const Omega1Evaluator& ev, double x, std::span<const double> ys) {
  if (ys.empty()) throw DomainError("extrapolated_trace: no heights");
  const double delta = ev.params().delta;
  std::vector<double> v(ys.size());
  std::vector<double> f(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    v[i] = std::pow(ys[i], delta);
    f[i] = ev.w(x, ys[i]);
  }
  // polynomial in v through the samples, evaluated at v = 0
  double result = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    double basis = 1.0;
    for (std::size_t m = 0; m < v.size(); ++m) {
      if (m != j) basis *= v[m] / (v[m] - v[j]);
    }
    result += basis * f[j];
  }
  return result;
}

}  // namespace tricomi::parabolic
