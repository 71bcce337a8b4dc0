#include "tricomi/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tricomi/error.hpp"

namespace tricomi {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + where + key + "'");
  }
}

const json& require_object(const json& j, const std::string& name) {
  if (!j.is_object()) throw ConfigError("'" + name + "' must be an object");
  return j;
}

double number(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("'" + where + key + "' must be a number");
  return v.get<double>();
}

std::size_t count(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 2) {
    throw ConfigError("'" + where + key + "' must be an integer >= 2");
  }
  return v.get<std::size_t>();
}

std::vector<double> coeffs(const json& parent, const char* key) {
  const std::string name = key;
  const json& obj = require_object(parent.at(key), name);
  reject_unknown(obj, {"coeffs"}, name + ".");
  if (!obj.contains("coeffs")) throw ConfigError("missing key '" + name + ".coeffs'");
  const auto& arr = obj.at("coeffs");
  if (!arr.is_array()) throw ConfigError("'" + name + ".coeffs' must be an array");
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number()) throw ConfigError("'" + name + ".coeffs' must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

SolveConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  require_object(root, "config");
  reject_unknown(root, {"alpha", "delta", "lambda2", "psi", "trace1", "trace2", "grids", "tolerances"},
                 "");
  for (const char* key : {"alpha", "delta", "lambda2", "psi"}) {
    if (!root.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
  }

  SolveConfig cfg;
  cfg.alpha = number(root, "alpha", "");
  cfg.delta = number(root, "delta", "");
  cfg.lambda2 = number(root, "lambda2", "");
  cfg.psi = coeffs(root, "psi");
  if (root.contains("trace1")) cfg.trace1 = coeffs(root, "trace1");
  if (root.contains("trace2")) cfg.trace2 = coeffs(root, "trace2");

  if (root.contains("grids")) {
    const json& g = require_object(root.at("grids"), "grids");
    reject_unknown(g, {"line_n", "omega1_nx", "omega1_ny", "omega2_n"}, "grids.");
    if (g.contains("line_n")) cfg.grids.line_n = count(g, "line_n", "grids.");
    if (g.contains("omega1_nx")) cfg.grids.omega1_nx = count(g, "omega1_nx", "grids.");
    if (g.contains("omega1_ny")) cfg.grids.omega1_ny = count(g, "omega1_ny", "grids.");
    if (g.contains("omega2_n")) cfg.grids.omega2_n = count(g, "omega2_n", "grids.");
  }
  if (root.contains("tolerances")) {
    const json& t = require_object(root.at("tolerances"), "tolerances");
    reject_unknown(t, {"ac", "gluing", "relation14", "pde"}, "tolerances.");
    auto tol = [&](const char* key, double& slot) {
      if (!t.contains(key)) return;
      slot = number(t, key, "tolerances.");
      if (!(slot > 0.0)) throw ConfigError(std::string("'tolerances.") + key + "' must be positive");
    };
    tol("ac", cfg.tolerances.ac);
    tol("gluing", cfg.tolerances.gluing);
    tol("relation14", cfg.tolerances.relation14);
    tol("pde", cfg.tolerances.pde);
  }
  return cfg;
}

SolveConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string to_json(const SolveConfig& cfg) {
  json j;
  j["alpha"] = cfg.alpha;
  j["delta"] = cfg.delta;
  j["lambda2"] = cfg.lambda2;
  j["psi"]["coeffs"] = cfg.psi;
  j["trace1"]["coeffs"] = cfg.trace1;
  j["trace2"]["coeffs"] = cfg.trace2;
  j["grids"] = {{"line_n", cfg.grids.line_n},
                {"omega1_nx", cfg.grids.omega1_nx},
                {"omega1_ny", cfg.grids.omega1_ny},
                {"omega2_n", cfg.grids.omega2_n}};
  j["tolerances"] = {{"ac", cfg.tolerances.ac},
                     {"gluing", cfg.tolerances.gluing},
                     {"relation14", cfg.tolerances.relation14},
                     {"pde", cfg.tolerances.pde}};
  return j.dump(2);
}

}  // namespace tricomi
