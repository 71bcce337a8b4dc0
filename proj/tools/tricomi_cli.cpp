// Command-line front end; talks to the solver only through the C API.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "tricomi.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitChecksFailed = 3;

int report_error(const char* what) {
  std::fprintf(stderr, "error: %s: %s\n", what, tricomi_last_error());
  return kExitError;
}

int run_solve(const std::string& config, const std::string& out, bool strict) {
  tricomi_solution* sol = nullptr;
  if (tricomi_solve_file(config.c_str(), &sol) != TRICOMI_OK) return report_error("solve failed");
  if (tricomi_solution_write(sol, out.c_str()) != TRICOMI_OK) {
    tricomi_solution_free(sol);
    return report_error("export failed");
  }
  const tricomi_report* rep = nullptr;
  const char* text = nullptr;
  int all_pass = 0;
  tricomi_solution_report(sol, &rep);
  tricomi_report_text(rep, &text);
  tricomi_report_all_pass(rep, &all_pass);
  std::fputs(text, stdout);
  std::printf("wrote %s/field.csv and %s/diagnostics.txt\n", out.c_str(), out.c_str());
  tricomi_solution_free(sol);
  if (strict && !all_pass) {
    std::fprintf(stderr, "strict mode: diagnostics failed\n");
    return kExitChecksFailed;
  }
  return 0;
}

int run_verify() {
  tricomi_report* rep = nullptr;
  if (tricomi_verify(&rep) != TRICOMI_OK) return report_error("verify failed");
  const char* text = nullptr;
  int all_pass = 0;
  tricomi_report_text(rep, &text);
  tricomi_report_all_pass(rep, &all_pass);
  std::fputs(text, stdout);
  tricomi_report_free(rep);
  return all_pass ? 0 : kExitChecksFailed;
}

int run_kernels(double gamma, double wmin, double wmax, int n) {
  std::printf("w,even_bessel\n");
  for (int i = 0; i < n; ++i) {
    const double w = n == 1 ? wmin : wmin + (wmax - wmin) * i / (n - 1);
    double v = 0.0;
    if (tricomi_even_bessel(gamma, w, &v) != TRICOMI_OK) return report_error("even_bessel");
    std::printf("%.17g,%.17g\n", w, v);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver for the mixed parabolic-hyperbolic problem with a fractional time derivative"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tricomi_version()));

  std::string config;
  std::string out;
  bool strict = false;
  auto* solve = app.add_subcommand("solve", "Solve from a JSON config and write field.csv, diagnostics.txt");
  solve->add_option("--config", config, "config file")->required()->check(CLI::ExistingFile);
  solve->add_option("--out", out, "output directory")->required();
  solve->add_flag("--strict", strict, "exit non-zero when a diagnostic fails");

  app.add_subcommand("verify", "Run the operator identity and solver property suites");

  double gamma = 0.0;
  double wmin = 0.0;
  double wmax = 1.0;
  int n = 11;
  auto* kernels = app.add_subcommand("kernels", "Tabulate even_bessel(gamma, w) on [wmin, wmax]");
  kernels->add_option("--gamma", gamma, "order")->required();
  kernels->add_option("--wmin", wmin, "first w")->required();
  kernels->add_option("--wmax", wmax, "last w")->required();
  kernels->add_option("--n", n, "number of points")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("solve")) return run_solve(config, out, strict);
  if (app.got_subcommand("verify")) return run_verify();
  return run_kernels(gamma, wmin, wmax, n);
}
