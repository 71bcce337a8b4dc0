#include "tricomi/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tricomi/error.hpp"
#include "tricomi/fracops.hpp"
#include "tricomi/ode_bvp.hpp"
#include "tricomi/parabolic.hpp"
#include "tricomi/specfun.hpp"
#include "tricomi/volterra.hpp"

namespace tricomi {

namespace {

template <class F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(name) + ": " + e.what());
  }
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double c) { return std::isfinite(c); });
}

double sup_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double a : v) m = std::max(m, std::abs(a));
  return m;
}

// residual scaled by the field size; an all-zero field reports the absolute value
double relative(double residual, double scale) { return scale > 0.0 ? residual / scale : residual; }

constexpr double kHeatGateTol = 1e-6;
constexpr double kTauSlopeTol = 1e-2;

}  // namespace

// ---- diagnostics container ----

void DiagnosticsReport::add_check(std::string name, double value, double tolerance) {
  const bool ok = std::isfinite(value) && value < tolerance;
  entries.push_back({std::move(name), value, tolerance, ok ? CheckStatus::kPass : CheckStatus::kFail});
}

void DiagnosticsReport::add_at_least(std::string name, double value, double bound) {
  const bool ok = std::isfinite(value) && value >= bound;
  entries.push_back({std::move(name), value, bound, ok ? CheckStatus::kPass : CheckStatus::kFail, true});
}

void DiagnosticsReport::add_info(std::string name, double value) {
  entries.push_back({std::move(name), value, 0.0, CheckStatus::kInfo});
}

const DiagnosticEntry* DiagnosticsReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

bool DiagnosticsReport::all_pass() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const DiagnosticEntry& e) { return e.status == CheckStatus::kFail; });
}

// ---- validation ----

ValidationReport validate_inputs(double alpha, double delta, double lambda2, const BoundaryData& data) {
  ProblemParameters p;
  try {
    p = derive_parameters(alpha, delta, lambda2);
  } catch (const ValidationError& e) {
    return {false, e.what()};
  }
  for (const auto* poly : {&data.psi, &data.trace1, &data.trace2}) {
    if (!all_finite(poly->coeffs())) return {false, "non-finite polynomial coefficient"};
  }
  if (data.psi.coeffs().size() > 13) return {false, "psi degree exceeds 12"};
  try {
    hyperbolic::validate_psi(p, data.psi);
  } catch (const ValidationError& e) {
    return {false, e.what()};
  }
  if (!data.trace1.coeffs().empty() && data.trace1.coeffs()[0] != 0.0) {
    return {false, "trace1 must vanish at y = 0 (lim y^{1-delta} phi1 = 0)"};
  }
  if (!data.trace2.coeffs().empty() && data.trace2.coeffs()[0] != 0.0) {
    return {false, "trace2 must vanish at y = 0 (lim y^{1-delta} phi2 = 0)"};
  }
  return {};
}

BoundaryData boundary_data(const SolveConfig& cfg) {
  return {Polynomial(cfg.psi), Polynomial(cfg.trace1), Polynomial(cfg.trace2)};
}

ValidationReport validate_inputs(const SolveConfig& cfg) {
  return validate_inputs(cfg.alpha, cfg.delta, cfg.lambda2, boundary_data(cfg));
}

// ---- hyperbolic PDE residual ----

double pde_residual_omega2(const ProblemParameters& p, const std::function<double(double, double)>& u,
                           double x, double y, double hx, double hy) {
  auto inside = [](double xx, double yy) {
    if (yy > 0.0) return false;
    const auto c = hyperbolic::CharacteristicPoint::from_xy(xx, yy);
    return c.xi >= 0.0 && c.eta <= 1.0;
  };
  if (!inside(x - 2 * hx, y) || !inside(x + 2 * hx, y) || !inside(x, y - 2 * hy) || !inside(x, y + 2 * hy)) {
    throw DomainError("pde_residual_omega2: point closer than two steps to the boundary");
  }
  const double u0 = u(x, y);
  const double uxx = (u(x + hx, y) - 2.0 * u0 + u(x - hx, y)) / (hx * hx);
  const double up = u(x, y + hy);
  const double um = u(x, y - hy);
  const double uyy = (up - 2.0 * u0 + um) / (hy * hy);
  const double uy = (up - um) / (2.0 * hy);
  return std::abs(uxx + y * uyy + p.alpha * uy - p.lambda2 * u0);
}

// ---- the solve ----

SolveResult solve_T0(const SolveConfig& cfg, const SolveOptions& opt) {
  const ValidationReport check = validate_inputs(cfg);
  if (!check.accepted) throw ValidationError(check.reason);

  SolveResult result;
  const ProblemParameters p = derive_parameters(cfg.alpha, cfg.delta, cfg.lambda2);
  result.params = p;
  const BoundaryData data = boundary_data(cfg);
  const auto grid = uniform_grid(cfg.grids.line_n);
  auto& tr = result.field.traces;

  std::function<double(double)> phi;
  switch (opt.phi_form) {
    case SolveOptions::PhiForm::kOperatorILambda:
      phi = [&](double t) { return hyperbolic::phi_operator(p, data.psi, t, hyperbolic::PhiVariant::kAILambda); };
      break;
    case SolveOptions::PhiForm::kOperatorLambda:
      phi = [&](double t) { return hyperbolic::phi_operator(p, data.psi, t, hyperbolic::PhiVariant::kALambda); };
      break;
    case SolveOptions::PhiForm::kExpanded:
      phi = [&](double t) { return hyperbolic::phi_fn(p, data.psi, t); };
      break;
  }

  tr.phi = stage("phi", [&] { return GridFunction::sample(grid, phi); });
  tr.Q = stage("assemble_Q", [&] { return volterra::assemble_Q(p, phi, grid); });
  tr.nu = stage("solve_volterra_20", [&] { return volterra::solve_volterra_20(p, tr.Q); });
  tr.tau = stage("tau_from_nu_18", [&] { return ode_bvp::tau_from_nu_18(p, tr.nu); });
  tr.T = stage("T_from_nu", [&] { return hyperbolic::T_from_nu(p, tr.nu, tr.phi); });
  tr.N = stage("N_from_T_nu", [&] { return hyperbolic::N_from_T_nu(p, tr.T, tr.nu); });

  const hyperbolic::ScalarFn T = [&](double s) { return tr.T(s); };
  const hyperbolic::ScalarFn N = [&](double s) { return tr.N(s); };
  auto u2_char = [&](double xi, double eta) { return hyperbolic::u_class_R00(p, T, N, {xi, eta}); };
  auto u2_xy = [&](double x, double y) {
    const auto c = hyperbolic::CharacteristicPoint::from_xy(x, y);
    return u2_char(std::max(c.xi, 0.0), std::min(c.eta, 1.0));
  };

  // characteristic grid on the hyperbolic half
  const std::size_t n2 = cfg.grids.omega2_n;
  const auto levels = uniform_grid(n2);
  stage("omega2", [&] {
    for (std::size_t i = 0; i < n2; ++i) {
      for (std::size_t j = i; j < n2; ++j) {
        const hyperbolic::CharacteristicPoint c{levels[i], levels[j]};
        result.field.omega2.push_back({c.xi, c.eta, c.x(), c.y(), u2_char(c.xi, c.eta)});
      }
    }
    return 0;
  });

  // tensor grid on the parabolic half
  const parabolic::Omega1Evaluator ev(p, tr.tau, data);
  auto& f1 = result.field.omega1;
  f1.xs = uniform_grid(cfg.grids.omega1_nx);
  f1.ys = uniform_grid(cfg.grids.omega1_ny, 0.01, 1.0);
  if (opt.omega1_field) {
    stage("omega1", [&] {
      f1.u.reserve(f1.xs.size() * f1.ys.size());
      for (double x : f1.xs) {
        for (double y : f1.ys) f1.u.push_back(ev.u(x, y));
      }
      return 0;
    });
  }

  // ---- diagnostics ----
  auto& rep = result.diagnostics;
  const auto& tol = cfg.tolerances;
  const auto diag_x = uniform_grid(21);

  {
    double sup = 0.0;
    for (const auto& s : result.field.omega2) {
      if (s.xi == 0.0) sup = std::max(sup, std::abs(s.u - data.psi(0.5 * s.eta)));
    }
    rep.add_check("ac_boundary", sup, tol.ac);
  }

  stage("gluing", [&] {
    // y^{1-delta} u = tau + c1 y^delta + c2 y^{2 delta} + ... with c_k growing like the k-th power
    // of the Laplacian eigenvalues, so the extrapolation is repeated at heights where y^delta is small
    const double ys[] = {0.02, 0.01, 0.005};
    const double ys_small[] = {4e-6, 2e-6, 1e-6};
    double gluing = 0.0, recovery = 0.0, gluing_small = 0.0, recovery_small = 0.0;
    for (double x : diag_x) {
      const double lim2 = u2_char(x, x);
      const double lim1 = parabolic::extrapolated_trace(ev, x, ys);
      gluing = std::max(gluing, std::abs(lim1 - lim2));
      recovery = std::max(recovery, std::abs(lim1 - tr.tau(x)));
      const double lim1s = parabolic::extrapolated_trace(ev, x, ys_small);
      gluing_small = std::max(gluing_small, std::abs(lim1s - lim2));
      recovery_small = std::max(recovery_small, std::abs(lim1s - tr.tau(x)));
    }
    rep.add_check("gluing_trace", gluing, tol.gluing);
    rep.add_check("trace_recovery", recovery, tol.gluing);
    rep.add_check("gluing_trace_small_y", gluing_small, tol.gluing);
    rep.add_check("trace_recovery_small_y", recovery_small, tol.gluing);
    return 0;
  });

  const hyperbolic::ScalarFn nu_fn = [&](double s) { return tr.nu(s); };
  const hyperbolic::ScalarFn phi_fn = [&](double s) { return tr.phi(s); };
  std::vector<double> tau14(diag_x.size());
  stage("relation_14", [&] {
    double sup = 0.0;
    for (std::size_t k = 0; k < diag_x.size(); ++k) {
      tau14[k] = hyperbolic::tau_relation_14(p, nu_fn, phi_fn, diag_x[k], {64});
      sup = std::max(sup, std::abs(tau14[k] - tr.tau(diag_x[k])));
    }
    rep.add_check("relation_14", sup, tol.relation14);
    return 0;
  });
  stage("relation_19", [&] {
    rep.add_check("relation_19", volterra::verify_19(p, nu_fn, phi_fn, diag_x), tol.relation14);
    return 0;
  });

  {
    // tau(0) must be exactly zero; the slope is a one-sided difference over the first cell
    const auto& tv = tr.tau.values();
    const double slope = std::abs((tv[1] - tv[0]) / (grid[1] - grid[0]));
    rep.add_check("tau_origin", tv[0] == 0.0 ? slope : INFINITY, kTauSlopeTol);
  }

  stage("pde_omega2", [&] {
    // steps a quarter of the grid spacing; y spans 1/16 of the x range
    const double hx = 0.25 / static_cast<double>(n2 - 1);
    const double hy = hx / 16.0;
    const std::size_t stride = std::max<std::size_t>(1, (n2 - 1) / 20);
    double res = 0.0;
    for (std::size_t i = 0; i < n2; i += stride) {
      for (std::size_t j = i; j < n2; j += stride) {
        const hyperbolic::CharacteristicPoint c{levels[i], levels[j]};
        try {
          res = std::max(res, pde_residual_omega2(p, u2_xy, c.x(), c.y(), hx, hy));
        } catch (const DomainError&) {
          // too close to the boundary
        }
      }
    }
    double scale = 0.0;
    for (const auto& s : result.field.omega2) scale = std::max(scale, std::abs(s.u));
    rep.add_check("pde_omega2", relative(res, scale), tol.pde);
    return 0;
  });

  stage("pde_omega1", [&] {
    const double h = 1.0 / static_cast<double>(cfg.grids.omega1_nx - 1);
    double res = 0.0;
    double scale = sup_abs(f1.u);
    for (double x : {0.25, 0.5, 0.75}) {
      for (double y : {0.25, 0.5, 0.75}) {
        res = std::max(res, parabolic::pde_residual_omega1(ev, x, y, h));
        if (f1.u.empty()) scale = std::max(scale, std::abs(ev.u(x, y)));
      }
    }
    rep.add_check("pde_omega1", relative(res, scale), tol.pde);
    return 0;
  });

  stage("heat_kernel_gate", [&] {
    const parabolic::FundamentalSolution heat(1.0, 0.0);
    double sup = 0.0;
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (double y : {0.05, 0.1, 0.2, 0.5, 1.0}) {
        const double exact = std::exp(-x * x / (4.0 * y)) / (2.0 * std::sqrt(std::numbers::pi * y));
        sup = std::max(sup, std::abs(heat(x, y) - exact));
      }
    }
    rep.add_check("heat_kernel_gate", sup, kHeatGateTol);
    return 0;
  });

  stage("left_inverse_13", [&] {
    // B^{i lambda}[eta^{-beta} N] must give back D^{1-beta} psi(eta/2) / Gamma(1-beta)
    const double rg = specfun::recip_gamma(1.0 - p.beta);
    const Polynomial d1 = data.psi.derivative(1);
    const Polynomial d2 = data.psi.derivative(2);
    fracops::SmoothFunction f;
    f.value = [&](double s) { return data.psi(0.5 * s); };
    f.d1 = [&](double s) { return 0.5 * d1(0.5 * s); };
    f.d2 = [&](double s) { return 0.25 * d2(0.5 * s); };
    f.order = 2;
    const fracops::ScalarFn g = [&](double s) { return s > 0.0 ? std::pow(s, -p.beta) * tr.N(s) : 0.0; };
    double sup = 0.0;
    for (double eta : diag_x) {
      if (eta == 0.0) continue;
      const double lhs = fracops::op_B(0.0, -p.lambda2, g, eta);
      const double rhs = rg * fracops::rl_derivative_q(1.0 - p.beta, f, eta);
      sup = std::max(sup, std::abs(lhs - rhs));
    }
    rep.add_check("left_inverse_13", sup, tol.ac);
    return 0;
  });

  stage("phi_forms", [&] {
    double gap_l = 0.0;
    double gap_il = 0.0;
    for (int k = 1; k <= 10; ++k) {
      const double t = 0.1 * k;
      const double e = hyperbolic::phi_fn(p, data.psi, t);
      gap_l = std::max(gap_l, std::abs(hyperbolic::phi_operator(p, data.psi, t, hyperbolic::PhiVariant::kALambda) - e));
      gap_il = std::max(gap_il, std::abs(hyperbolic::phi_operator(p, data.psi, t, hyperbolic::PhiVariant::kAILambda) - e));
    }
    rep.add_info("phi_A_lambda_vs_expanded", gap_l);
    rep.add_info("phi_A_ilambda_vs_expanded", gap_il);
    return 0;
  });

  {
    // tau14 - tau18 solves D'' = lambda^2 D, D(0) = 0, D(1) = -tau14(1); report how closely it
    // matches that homogeneous solution
    const double end = tau14.back();
    const double s1 = ode_bvp::S(p.lambda2, 1.0);
    double gap = 0.0;
    for (std::size_t k = 0; k < diag_x.size(); ++k) {
      const double d = tr.tau(diag_x[k]) - tau14[k];
      gap = std::max(gap, std::abs(d + end * ode_bvp::S(p.lambda2, diag_x[k]) / s1));
    }
    rep.add_info("relation_14_endpoint", std::abs(end));
    rep.add_info("relation_14_homogeneous_gap", gap);
  }
  return result;
}

}  // namespace tricomi
