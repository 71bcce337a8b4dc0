#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "tricomi/grid_function.hpp"
#include "tricomi/problem.hpp"

// The fractional parabolic half y > 0:  u_xx - D^delta_{0y} u - lambda^2 u = 0.

namespace tricomi::parabolic {

/// phi(r) = e^{1,0}_{1,beta}(-r) = sum_k (-r)^k / (k! Gamma(-beta k)), r >= 0, 0 < beta < 1.
///
/// Evaluated once on a uniform r-grid (series for r <= 1, a Talbot-type contour for the
/// Laplace-inversion integral otherwise) and then read back through cubic interpolation
/// of log(phi(r)/r). Beyond the table end phi is below 1e-300 and returned as 0.
class WrightKernel {
 public:
  explicit WrightKernel(double beta);

  double beta() const noexcept { return beta_; }
  double operator()(double r) const;
  /// Direct evaluation, no table.
  double direct(double r) const;
  double cutoff() const noexcept { return cutoff_; }

  /// Process-wide instance for this beta, built on first use.
  static const WrightKernel& shared(double beta);

 private:
  double beta_;
  double step_;
  double cutoff_ = 0.0;
  std::vector<double> log_ratio_;  // log(phi(r)/r) at r = k step
};

/// Gamma(x, y) = 1/(2y) int_{|x|}^inf phi(xi / y^{delta/2}) J0(lambda sqrt(xi^2 - x^2)) dxi
class FundamentalSolution {
 public:
  /// delta in (0, 1]; delta = 1 is accepted for the heat-kernel check.
  FundamentalSolution(double delta, double lambda2);

  double operator()(double x, double y) const;
  double delta() const noexcept { return delta_; }
  double lambda2() const noexcept { return lambda2_; }

 private:
  double delta_;
  double lambda2_;
  const WrightKernel* phi_;
};

double gamma_fundamental(const ProblemParameters& p, double x, double y);

/// G(x,y;t,s) = sum_{|m| <= M} [Gamma(x-t+2m, y-s) - Gamma(x+t+2m, y-s)].
/// Throws ConvergenceError when a |m| = M term exceeds 1e-14.
double green_parabolic(const FundamentalSolution& g, double x, double y, double t, double s, int M);
double green_parabolic(const ProblemParameters& p, double x, double y, double t, double s, int M);

struct Omega1Options {
  int t_nodes = 48;         // Gauss-Legendre nodes on each side of t = x
  int trace_nodes = 24;     // Gauss-Jacobi nodes for the lateral boundary terms
  double fd_step = 1e-5;    // step of the G_t difference quotient
  double y_floor = 1e-8;    // u(x, y) refuses y below this
  int table_density = 16;   // Gamma-table nodes per unit of y^{delta/2}
};

/// u(x, y) = Gamma(delta) int tau G(x,y;t,0) dt + int phi1 G_t(x,y;0,s) ds - int phi2 G_t(x,y;1,s) ds
///
/// Gamma(delta) normalizes the initial term so that y^{1-delta} u -> tau as y -> 0; the kernel
/// as printed has mass y^{delta-1} / Gamma(delta). phi_i(s) = trace_i(s) s^{delta-1}.
///
/// For each y the evaluator tabulates Gamma(., y) once and reuses it for every x.
class Omega1Evaluator {
 public:
  Omega1Evaluator(const ProblemParameters& p, GridFunction tau, BoundaryData traces,
                  Omega1Options opt = {});

  double u(double x, double y) const;
  /// y^{1-delta} u(x, y), continued by tau(x) below the floor.
  double w(double x, double y) const;

  const ProblemParameters& params() const noexcept { return p_; }
  const GridFunction& tau() const noexcept { return tau_; }
  const FundamentalSolution& gamma() const noexcept { return gamma_; }

 private:
  struct Table {
    double step = 0.0;
    std::vector<double> values;  // Gamma(k step, y), even in its first argument
    double operator()(double z) const;
    double reach() const noexcept { return step * static_cast<double>(values.size() - 1); }
  };
  const Table& table(double y) const;
  double green_from_table(const Table& tab, double x, double t) const;
  double initial_term(double x, double y) const;
  double lateral_terms(double x, double y) const;

  ProblemParameters p_;
  GridFunction tau_;
  BoundaryData traces_;
  Omega1Options opt_;
  FundamentalSolution gamma_;
  double gamma_delta_;
  mutable std::mutex mu_;
  mutable std::map<double, std::unique_ptr<Table>> tables_;
};

/// |u_xx - D^delta_{0y} u - lambda^2 u| at (x, y) with step h: central differences in x, and
/// D^delta u = d/dy I^{1-delta} u with I^{1-delta} u integrated against y^{1-delta} u by
/// Gauss-Jacobi in q = (s/y)^delta and the outer derivative by a central difference.
double pde_residual_omega1(const Omega1Evaluator& ev, double x, double y, double h, int n = 24);

/// Extrapolates y^{1-delta} u(x, y) to y = 0 from three heights assuming an expansion in y^delta.
double extrapolated_trace(const Omega1Evaluator& ev, double x, std::span<const double> ys);

}  // namespace tricomi::parabolic
