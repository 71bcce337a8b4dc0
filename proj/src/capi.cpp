#include "tricomi.h"

#include <exception>
#include <memory>
#include <new>
#include <string>

#include "tricomi/config.hpp"
#include "tricomi/error.hpp"
#include "tricomi/pipeline.hpp"
#include "tricomi/specfun.hpp"

struct tricomi_report {
  tricomi::DiagnosticsReport report;
  std::string text;
};

struct tricomi_solution {
  tricomi::SolveResult result;
  tricomi_report report;
};

namespace {

thread_local std::string last_error;

tricomi_status fail(tricomi_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
tricomi_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return TRICOMI_OK;
  } catch (const tricomi::Error& e) {
    return fail(static_cast<tricomi_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TRICOMI_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TRICOMI_E_INTERNAL, e.what());
  } catch (...) {
    return fail(TRICOMI_E_INTERNAL, "unknown failure");
  }
}

void solve(const tricomi::SolveConfig& cfg, tricomi_solution** out) {
  auto sol = std::make_unique<tricomi_solution>();
  sol->result = tricomi::solve_T0(cfg);
  sol->report.report = sol->result.diagnostics;
  sol->report.text = tricomi::render_diagnostics(sol->report.report);
  *out = sol.release();
}

}  // namespace

extern "C" {

const char* tricomi_version(void) { return "0.1.0"; }

const char* tricomi_last_error(void) { return last_error.c_str(); }

tricomi_status tricomi_solve_json(const char* json, tricomi_solution** out) {
  if (!json || !out) return fail(TRICOMI_E_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { solve(tricomi::parse_config(json), out); });
}

tricomi_status tricomi_solve_file(const char* path, tricomi_solution** out) {
  if (!path || !out) return fail(TRICOMI_E_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { solve(tricomi::load_config(path), out); });
}

void tricomi_solution_free(tricomi_solution* sol) { delete sol; }

tricomi_status tricomi_solution_write(const tricomi_solution* sol, const char* dir) {
  if (!sol || !dir) return fail(TRICOMI_E_ARGUMENT, "null argument");
  return guarded([&] { tricomi::export_field(sol->result, dir); });
}

tricomi_status tricomi_solution_report(const tricomi_solution* sol, const tricomi_report** out) {
  if (!sol || !out) return fail(TRICOMI_E_ARGUMENT, "null argument");
  *out = &sol->report;
  return TRICOMI_OK;
}

tricomi_status tricomi_solution_trace(const tricomi_solution* sol, const char* which, double* nodes,
                                      double* values, size_t capacity, size_t* count) {
  if (!sol || !which || !count) return fail(TRICOMI_E_ARGUMENT, "null argument");
  const auto& tr = sol->result.field.traces;
  const std::string w = which;
  const tricomi::GridFunction* g = w == "tau"   ? &tr.tau
                                   : w == "nu"  ? &tr.nu
                                   : w == "T"   ? &tr.T
                                   : w == "N"   ? &tr.N
                                   : w == "phi" ? &tr.phi
                                   : w == "Q"   ? &tr.Q
                                                : nullptr;
  if (!g) return fail(TRICOMI_E_ARGUMENT, "unknown trace '" + w + "'");
  *count = g->size();
  for (size_t i = 0; i < g->size() && i < capacity; ++i) {
    if (nodes) nodes[i] = g->nodes()[i];
    if (values) values[i] = g->values()[i];
  }
  return TRICOMI_OK;
}

tricomi_status tricomi_verify(tricomi_report** out) {
  if (!out) return fail(TRICOMI_E_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto rep = std::make_unique<tricomi_report>();
    rep->report = tricomi::run_verification();
    rep->text = tricomi::render_diagnostics(rep->report);
    *out = rep.release();
  });
}

void tricomi_report_free(tricomi_report* rep) { delete rep; }

tricomi_status tricomi_report_size(const tricomi_report* rep, size_t* n) {
  if (!rep || !n) return fail(TRICOMI_E_ARGUMENT, "null argument");
  *n = rep->report.entries.size();
  return TRICOMI_OK;
}

tricomi_status tricomi_report_entry(const tricomi_report* rep, size_t i, const char** name, double* value,
                                    double* tolerance, tricomi_check* status) {
  if (!rep) return fail(TRICOMI_E_ARGUMENT, "null argument");
  if (i >= rep->report.entries.size()) return fail(TRICOMI_E_ARGUMENT, "entry index out of range");
  const auto& e = rep->report.entries[i];
  if (name) *name = e.name.c_str();
  if (value) *value = e.value;
  if (tolerance) *tolerance = e.tolerance;
  if (status) {
    *status = e.status == tricomi::CheckStatus::kPass   ? TRICOMI_CHECK_PASS
              : e.status == tricomi::CheckStatus::kFail ? TRICOMI_CHECK_FAIL
                                                        : TRICOMI_CHECK_INFO;
  }
  return TRICOMI_OK;
}

tricomi_status tricomi_report_all_pass(const tricomi_report* rep, int* all_pass) {
  if (!rep || !all_pass) return fail(TRICOMI_E_ARGUMENT, "null argument");
  *all_pass = rep->report.all_pass() ? 1 : 0;
  return TRICOMI_OK;
}

tricomi_status tricomi_report_text(const tricomi_report* rep, const char** text) {
  if (!rep || !text) return fail(TRICOMI_E_ARGUMENT, "null argument");
  *text = rep->text.c_str();
  return TRICOMI_OK;
}

tricomi_status tricomi_even_bessel(double g, double w, double* out) {
  if (!out) return fail(TRICOMI_E_ARGUMENT, "null argument");
  return guarded([&] { *out = tricomi::specfun::even_bessel(g, w); });
}

}  // extern "C"
