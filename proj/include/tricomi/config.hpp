#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tricomi {

struct GridConfig {
  std::size_t line_n = 401;     // nodes of the trace line [0, 1]
  std::size_t omega1_nx = 101;  // x nodes of the parabolic tensor grid
  std::size_t omega1_ny = 101;  // y nodes on [0.01, 1]
  std::size_t omega2_n = 101;   // xi levels of the characteristic grid
};

struct Tolerances {
  double ac = 1e-3;
  double gluing = 1e-3;
  double relation14 = 1e-3;
  double pde = 1e-2;
};

/// Everything a solve needs, as read from a config file.
struct SolveConfig {
  double alpha = -0.25;
  double delta = 0.5;
  double lambda2 = 0.0;
  std::vector<double> psi;     // coefficients, lowest power first
  std::vector<double> trace1;  // y^{1-delta} phi1 on x = 0
  std::vector<double> trace2;  // y^{1-delta} phi2 on x = 1
  GridConfig grids;
  Tolerances tolerances;
};

/// Parses the JSON config. alpha, delta, lambda2 and psi.coeffs are required; traces default
/// to zero and grids/tolerances to the values above. Unknown keys are rejected with ConfigError.
SolveConfig parse_config(std::string_view text);

/// Reads and parses a config file (IoError if unreadable).
SolveConfig load_config(const std::filesystem::path& path);

/// Canonical JSON rendering of a config (used by the C API round trip and tests).
std::string to_json(const SolveConfig& cfg);

}  // namespace tricomi
