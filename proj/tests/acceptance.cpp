// Acceptance run: one PASS/FAIL line per criterion, tolerances as pinned in the build contract.
//
//   acceptance <path-to-tricomi-cli> <config-dir> <scratch-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tricomi/config.hpp"
#include "tricomi/fracops.hpp"
#include "tricomi/grid_function.hpp"
#include "tricomi/ode_bvp.hpp"
#include "tricomi/parabolic.hpp"
#include "tricomi/pipeline.hpp"
#include "tricomi/specfun.hpp"
#include "tricomi/volterra.hpp"

using namespace tricomi;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
  std::string detail;
  bool ok = true;
  void add(const std::string& name, double value, double tol, bool pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s=%.3g (%s%.3g)", detail.empty() ? "" : ", ", name.c_str(), value,
                  pass ? "ok vs " : "over ", tol);
    detail += buf;
    ok = ok && pass;
  }
  void below(const std::string& name, double value, double tol) { add(name, value, tol, std::isfinite(value) && value < tol); }
  void at_least(const std::string& name, double value, double tol) { add(name, value, tol, std::isfinite(value) && value >= tol); }
};

int failed = 0;

void report(int id, const char* title, const Line& l) {
  std::printf("%s criterion %d: %s | %s\n", l.ok ? "PASS" : "FAIL", id, title, l.detail.c_str());
  std::fflush(stdout);
  if (!l.ok) ++failed;
}

// 1. A and B inverse to each other
void criterion1() {
  const auto t0 = Clock::now();
  const fracops::ScalarFn gs[] = {[](double x) { return x * x; }, [](double x) { return x * x * x * (1.0 - x); }};
  double sup = 0.0;
  for (const auto& g : gs) {
    for (double k : {0.0, 0.3}) {
      for (double l2 : {-4.0, 0.0, 4.0}) {
        const fracops::ScalarFn bg = [&](double t) { return fracops::op_B(k, l2, g, t); };
        const fracops::ScalarFn ag = [&](double t) { return fracops::op_A(k, l2, g, t); };
        for (int i = 1; i <= 50; ++i) {
          const double x = k + (1.0 - k) * i / 50.0;
          sup = std::max(sup, std::abs(fracops::op_A(k, l2, bg, x) - g(x)));
          sup = std::max(sup, std::abs(fracops::op_B(k, l2, ag, x) - g(x)));
        }
      }
    }
  }
  Line l;
  l.below("sup|AB-I|,|BA-I|", sup, 1e-7);
  l.below("seconds", seconds_since(t0), 2.0);
  report(1, "operator inverse", l);
}

// 2. Lemma 1
void criterion2() {
  const fracops::ScalarFn g = [](double x) { return x * x * (1.0 - x); };
  double sup = 0.0;
  for (double l2 : {0.0, 1.0}) {
    for (int i = 1; i <= 20; ++i) {
      const double x = i / 20.0;
      sup = std::max(sup, std::abs(fracops::lemma1_lhs(-0.75, l2, g, x) - fracops::lemma1_rhs(-0.75, l2, g, x)));
    }
  }
  Line l;
  l.below("sup|lhs-rhs|", sup, 1e-6);
  report(2, "Lemma 1 identity", l);
}

// 3. special functions
void criterion3() {
  Line l;
  double origin = 0.0;
  for (double g : {-0.75, -0.5, -0.25, 0.0, 0.5, 1.0, 2.5}) origin = std::max(origin, std::abs(specfun::even_bessel(g, 0.0) - 1.0));
  l.add("even_bessel(g,0)-1", origin, 0.0, origin == 0.0);

  double half = 0.0;
  for (double w = 0.01; w < 40.0; w += 0.1) {
    half = std::max(half, std::abs(specfun::even_bessel(0.5, w) - std::sin(std::sqrt(w)) / std::sqrt(w)));
  }
  l.below("Jbar_1/2", half, 1e-10);

  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> gd(-0.9, 3.0), wd(-10.0, 10.0);
  double rec = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double g = gd(rng), w = wd(rng), h = 1e-5;
    const double fd = (specfun::even_bessel(g, w + h) - specfun::even_bessel(g, w - h)) / (2.0 * h);
    const double r = -specfun::even_bessel(g + 1.0, w) / (4.0 * (g + 1.0));
    rec = std::max(rec, std::abs(fd - r) / std::max(std::abs(r), 1e-3));
  }
  l.below("derivative recurrence", rec, 1e-6);

  double wr = 0.0;
  for (double d2 : {1.0, 0.5, 2.5}) {
    for (double z = -5.0; z <= 5.0; z += 0.1) {
      const double ref = std::exp(z) / std::tgamma(d2);
      wr = std::max(wr, std::abs(specfun::wright_e(1.0, d2, 1.0, 0.0, z) - ref) / std::max(1.0, std::abs(ref)));
    }
  }
  l.below("wright_e b=0", wr, 1e-10);
  report(3, "special functions", l);
}

// 4. Volterra solver
double manufactured(const ProblemParameters& p, std::size_t n) {
  const double sigma = -2.0 * p.beta - 2.0;
  const double c = volterra::nu_coefficient(p);
  auto exact = [](double x) { return x * x * (1.0 - x); };
  auto kern = [&](double r) { return oracle::even_bessel_neg(p.beta + 1.0, -p.lambda2 * r * r); };
  const auto grid = uniform_grid(n);
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid[i];
    q[i] = exact(x) - c * oracle::weakly_singular([&](double s) { return kern(x - s) * exact(s); }, x, sigma, 2000);
  }
  const auto nu = volterra::solve_volterra_20(p, GridFunction(grid, q));
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) e = std::max(e, std::abs(nu.values()[i] - exact(grid[i])));
  return e;
}

void criterion4() {
  Line l;
  const auto t0 = Clock::now();
  {
    const auto grid = uniform_grid(401);
    std::vector<double> q(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) q[i] = 1.0 - 2.0 * std::sqrt(grid[i]);
    const auto nu = volterra::solve_weakly_singular(grid, -0.5, 1.0, [](double) { return 1.0; }, q);
    double e = 0.0;
    for (double v : nu) e = std::max(e, std::abs(v - 1.0));
    l.below("abel", e, 1e-4);
  }
  const auto p = derive_parameters(-0.25, 0.5, 1.0);
  const double e1 = manufactured(p, 101), e2 = manufactured(p, 201), e3 = manufactured(p, 401);
  l.below("manufactured", e3, 1e-5);
  l.at_least("order", std::min(std::log2(e1 / e2), std::log2(e2 / e3)), 1.5);
  l.below("seconds", seconds_since(t0), 5.0);
  report(4, "Volterra solver", l);
}

// 5. ODE Green relation
double ode_residual(const ProblemParameters& p, std::size_t n) {
  auto nu = [](double x) { return std::cos(3.0 * x) + x * x; };
  const auto grid = uniform_grid(n);
  const auto tau = ode_bvp::tau_from_nu_18(p, GridFunction::sample(grid, nu));
  const auto& t = tau.values();
  const double h = grid[1] - grid[0];
  double r = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d2 = (t[i + 1] - 2.0 * t[i] + t[i - 1]) / (h * h);
    r = std::max(r, std::abs(d2 - p.gamma_1p_delta * nu(grid[i]) - p.lambda2 * t[i]));
  }
  return r;
}

void criterion5() {
  Line l;
  const auto p0 = derive_parameters(-0.25, 0.5, 0.0);
  const auto grid = uniform_grid(401);
  const auto tau = ode_bvp::tau_from_nu_18(p0, GridFunction::sample(grid, [](double) { return 1.0; }));
  double e = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    e = std::max(e, std::abs(tau.values()[i] - std::tgamma(1.5) * grid[i] * (grid[i] - 1.0) / 2.0));
  }
  l.below("tau closed form", e, 1e-8);
  // "order about 2": both successive refinement ratios within 0.2 of 2
  double worst = 0.0;
  for (double l2 : {0.0, 1.0, -1.0}) {
    const auto p = derive_parameters(-0.25, 0.5, l2);
    const double r1 = ode_residual(p, 51), r2 = ode_residual(p, 101), r3 = ode_residual(p, 201);
    worst = std::max({worst, std::abs(std::log2(r1 / r2) - 2.0), std::abs(std::log2(r2 / r3) - 2.0)});
  }
  l.below("|order-2|", worst, 0.2);
  report(5, "ODE Green relation", l);
}

// 6 and 7 share the baseline solve
SolveResult baseline;

void criterion6(const fs::path& configs) {
  Line l;
  const auto t0 = Clock::now();
  for (const char* name : {"baseline.json", "lambda_real.json", "lambda_imag.json"}) {
    const auto cfg = load_config(configs / name);
    SolveResult r;
    try {
      r = solve_T0(cfg);
    } catch (const std::exception& ex) {
      std::printf("    %s: solve failed: %s\n", name, ex.what());
      l.ok = false;
      continue;
    }
    const std::string tag = "l2=" + std::to_string(static_cast<int>(cfg.lambda2)) + " ";
    auto get = [&](const char* n) { return r.diagnostics.find(n)->value; };
    l.below(tag + "ac", get("ac_boundary"), 1e-3);
    l.below(tag + "gluing", get("gluing_trace"), 1e-3);
    l.below(tag + "rel14", get("relation_14"), 1e-3);
    l.below(tag + "rel19", get("relation_19"), 1e-3);
    l.below(tag + "pde2/max|u|", get("pde_omega2"), 1e-2);
    const double tau0 = r.field.traces.tau.values().front();
    l.add(tag + "tau(0)", tau0, 0.0, tau0 == 0.0);
    l.below(tag + "|tau'(0)|", get("tau_origin"), 1e-2);
    if (cfg.lambda2 == 0.0) baseline = std::move(r);
  }
  l.below("seconds", seconds_since(t0), 60.0);
  report(6, "end-to-end baseline", l);
}

void criterion7() {
  Line l;
  {
    const parabolic::FundamentalSolution heat(1.0, 0.0);
    double sup = 0.0;
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (double y : {0.05, 0.1, 0.2, 0.5, 1.0}) {
        sup = std::max(sup, std::abs(heat(x, y) - std::exp(-x * x / (4 * y)) / (2 * std::sqrt(std::numbers::pi * y))));
      }
    }
    l.below("heat kernel", sup, 1e-6);
  }
  {
    const auto p = derive_parameters(-0.25, 0.5, 0.0);
    const parabolic::FundamentalSolution g(p.delta, p.lambda2);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double sup = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double t = u(rng), y = 0.05 + u(rng), s = 0.02 * u(rng);
      sup = std::max({sup, std::abs(parabolic::green_parabolic(g, 0.0, y, t, s, 24)),
                      std::abs(parabolic::green_parabolic(g, 1.0, y, t, s, 24))});
    }
    l.below("image cancellation", sup, 1e-12);
  }
  // y^{1-delta} u -> tau, extrapolated from y in {0.02, 0.01, 0.005} on the baseline solution
  const auto* rec = baseline.diagnostics.find("trace_recovery");
  l.below("trace recovery", rec ? rec->value : NAN, 1e-3);
  report(7, "parabolic gates", l);
  if (const auto* small = baseline.diagnostics.find("trace_recovery_small_y")) {
    std::printf("    note: same extrapolation from y in {4e-6, 2e-6, 1e-6}: %.3g\n", small->value);
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion8(const std::string& cli, const fs::path& configs, const fs::path& scratch) {
  Line l;
  const fs::path a = scratch / "run_a", b = scratch / "run_b";
  fs::remove_all(a);
  fs::remove_all(b);
  bool ran = true;
  for (const auto& dir : {a, b}) {
    const std::string cmd = "\"" + cli + "\" solve --config \"" + (configs / "baseline.json").string() + "\" --out \"" +
                            dir.string() + "\" > /dev/null";
    ran = ran && std::system(cmd.c_str()) == 0;
  }
  l.add("solve exit codes", ran ? 0 : 1, 0, ran);
  for (const char* f : {"field.csv", "diagnostics.txt"}) {
    const auto x = slurp(a / f), y = slurp(b / f);
    const bool same = !x.empty() && x == y;
    l.add(std::string(f) + " differs", same ? 0 : 1, 0, same);
  }
  report(8, "determinism", l);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::fprintf(stderr, "usage: %s <tricomi-cli> <config-dir> <scratch-dir>\n", argv[0]);
    return 2;
  }
  const fs::path configs = argv[2], scratch = argv[3];
  fs::create_directories(scratch);
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6(configs);
  criterion7();
  criterion8(argv[1], configs, scratch);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed ? 1 : 0;
}
