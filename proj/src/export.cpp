#include <charconv>
#include <fstream>
#include <string>

#include "tricomi/error.hpp"
#include "tricomi/pipeline.hpp"

namespace tricomi {

namespace {

// shortest round-trip form, independent of the C locale
void put(std::string& out, double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, r.ptr);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kInfo: return "INFO";
  }
  return "?";
}

}  // namespace

std::string render_field_csv(const SolutionField& field) {
  std::string out = "domain,x,y,xi,eta,u\n";
  const auto& f1 = field.omega1;
  for (std::size_t i = 0; i < f1.xs.size() && !f1.u.empty(); ++i) {
    for (std::size_t j = 0; j < f1.ys.size(); ++j) {
      out += "omega1,";
      put(out, f1.xs[i]);
      out += ',';
      put(out, f1.ys[j]);
      out += ",,,";
      put(out, f1.u[i * f1.ys.size() + j]);
      out += '\n';
    }
  }
  for (const auto& s : field.omega2) {
    out += "omega2,";
    put(out, s.x);
    out += ',';
    put(out, s.y);
    out += ',';
    put(out, s.xi);
    out += ',';
    put(out, s.eta);
    out += ',';
    put(out, s.u);
    out += '\n';
  }
  return out;
}

std::string render_diagnostics(const DiagnosticsReport& report) {
  std::string out = "name,value,tolerance,status\n";
  for (const auto& e : report.entries) {
    out += e.name;
    out += ',';
    put(out, e.value);
    out += ',';
    if (e.status == CheckStatus::kInfo) {
      out += '-';
    } else {
      if (e.at_least) out += ">=";
      put(out, e.tolerance);
    }
    out += ',';
    out += status_name(e.status);
    out += '\n';
  }
  return out;
}

void export_field(const SolveResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  write_file(dir / "field.csv", render_field_csv(result.field));
  write_file(dir / "diagnostics.txt", render_diagnostics(result.diagnostics));
}

}  // namespace tricomi
