#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "tricomi/config.hpp"
#include "tricomi/grid_function.hpp"
#include "tricomi/hyperbolic.hpp"
#include "tricomi/problem.hpp"

// End-to-end solve of the mixed problem: Phi -> Q -> nu -> tau -> T, N -> u on both halves,
// followed by the residual checks.

namespace tricomi {

struct ValidationReport {
  bool accepted = true;
  std::string reason;  // the violated hypothesis when rejected
};

/// Checks the parameter ranges, the spectral exclusion, psi conditions and the traces.
/// Never throws for bad input; the reason names the first violated hypothesis.
ValidationReport validate_inputs(double alpha, double delta, double lambda2, const BoundaryData& data);
ValidationReport validate_inputs(const SolveConfig& cfg);

BoundaryData boundary_data(const SolveConfig& cfg);

struct TraceSet {
  GridFunction phi;
  GridFunction Q;
  GridFunction nu;
  GridFunction tau;
  GridFunction T;
  GridFunction N;
};

struct Omega1Field {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> u;  // u[i * ys.size() + j] = u(xs[i], ys[j])
};

struct Omega2Sample {
  double xi = 0.0;
  double eta = 0.0;
  double x = 0.0;
  double y = 0.0;
  double u = 0.0;
};

struct SolutionField {
  Omega1Field omega1;
  std::vector<Omega2Sample> omega2;  // xi-major, eta increasing
  TraceSet traces;
};

enum class CheckStatus { kPass, kFail, kInfo };

struct DiagnosticEntry {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;  // unused for kInfo rows
  CheckStatus status = CheckStatus::kInfo;
  bool at_least = false;   // pass means value >= tolerance instead of value < tolerance
};

struct DiagnosticsReport {
  std::vector<DiagnosticEntry> entries;

  void add_check(std::string name, double value, double tolerance);
  void add_at_least(std::string name, double value, double bound);
  void add_info(std::string name, double value);
  const DiagnosticEntry* find(const std::string& name) const;
  bool all_pass() const;
};

struct SolveOptions {
  /// Operator used to build Phi. The expanded closed form is available for comparison.
  enum class PhiForm { kOperatorILambda, kOperatorLambda, kExpanded };
  PhiForm phi_form = PhiForm::kOperatorILambda;
  bool omega1_field = true;  // skip the tensor-grid sweep when false (diagnostics still run)
};

struct SolveResult {
  ProblemParameters params;
  SolutionField field;
  DiagnosticsReport diagnostics;
};

/// Runs the whole pipeline. Input problems raise ValidationError; a failing stage rethrows its
/// error with the stage name prefixed. Diagnostics never abort the solve.
SolveResult solve_T0(const SolveConfig& cfg, const SolveOptions& opt = {});

/// Central-difference residual of u_xx + y u_yy + alpha u_y - lambda^2 u for a function on
/// the hyperbolic half. The five-point stencil with steps hx, hy must stay inside the domain.
double pde_residual_omega2(const ProblemParameters& p, const std::function<double(double, double)>& u,
                           double x, double y, double hx, double hy);

/// Writes field.csv and diagnostics.txt into `dir` (created if missing).
void export_field(const SolveResult& result, const std::filesystem::path& dir);

/// The rendered files, for byte comparisons without touching the disk.
std::string render_field_csv(const SolutionField& field);
std::string render_diagnostics(const DiagnosticsReport& report);

/// Property suites behind the `verify` command.
DiagnosticsReport run_verification();

}  // namespace tricomi
