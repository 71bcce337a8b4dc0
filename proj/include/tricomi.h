/* C interface to the mixed parabolic-hyperbolic solver.
 *
 * Every call returns a tricomi_status. On failure tricomi_last_error() gives a message
 * for the calling thread, valid until the next call on that thread.
 */
#ifndef TRICOMI_H
#define TRICOMI_H

#include <stddef.h>

#if defined(TRICOMI_BUILDING_LIBRARY)
#define TRICOMI_API __attribute__((visibility("default")))
#else
#define TRICOMI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tricomi_status {
  TRICOMI_OK = 0,
  TRICOMI_E_DOMAIN = 1,
  TRICOMI_E_POLE = 2,
  TRICOMI_E_CONVERGENCE = 3,
  TRICOMI_E_VALIDATION = 4,
  TRICOMI_E_IO = 5,
  TRICOMI_E_CONFIG = 6,
  TRICOMI_E_INTERNAL = 7,
  TRICOMI_E_ARGUMENT = 8 /* null handle or out-of-range index */
} tricomi_status;

typedef enum tricomi_check {
  TRICOMI_CHECK_PASS = 0,
  TRICOMI_CHECK_FAIL = 1,
  TRICOMI_CHECK_INFO = 2
} tricomi_check;

typedef struct tricomi_solution tricomi_solution;
typedef struct tricomi_report tricomi_report;

TRICOMI_API const char* tricomi_version(void);
TRICOMI_API const char* tricomi_last_error(void);

/* Solve from a JSON config given as text or as a file path. */
TRICOMI_API tricomi_status tricomi_solve_json(const char* json, tricomi_solution** out);
TRICOMI_API tricomi_status tricomi_solve_file(const char* path, tricomi_solution** out);
TRICOMI_API void tricomi_solution_free(tricomi_solution* sol);

/* Writes field.csv and diagnostics.txt into dir. */
TRICOMI_API tricomi_status tricomi_solution_write(const tricomi_solution* sol, const char* dir);

/* Borrowed view of the diagnostics; lives as long as the solution. */
TRICOMI_API tricomi_status tricomi_solution_report(const tricomi_solution* sol,
                                                   const tricomi_report** out);

/* Samples of the trace line: which is one of "tau", "nu", "T", "N", "phi", "Q".
 * Copies min(capacity, n) values into nodes/values (either may be NULL) and stores n in count. */
TRICOMI_API tricomi_status tricomi_solution_trace(const tricomi_solution* sol, const char* which,
                                                  double* nodes, double* values, size_t capacity,
                                                  size_t* count);

/* Runs the identity and property suites behind `verify`. Free with tricomi_report_free. */
TRICOMI_API tricomi_status tricomi_verify(tricomi_report** out);
TRICOMI_API void tricomi_report_free(tricomi_report* rep);

TRICOMI_API tricomi_status tricomi_report_size(const tricomi_report* rep, size_t* n);
/* name stays valid as long as the report. */
TRICOMI_API tricomi_status tricomi_report_entry(const tricomi_report* rep, size_t i, const char** name,
                                                double* value, double* tolerance, tricomi_check* status);
/* 1 when no entry failed. */
TRICOMI_API tricomi_status tricomi_report_all_pass(const tricomi_report* rep, int* all_pass);
/* The diagnostics.txt rendering; valid as long as the report. */
TRICOMI_API tricomi_status tricomi_report_text(const tricomi_report* rep, const char** text);

/* Gamma(g+1) sum_m (-w/4)^m / (m! Gamma(m+g+1)). */
TRICOMI_API tricomi_status tricomi_even_bessel(double g, double w, double* out);

#ifdef __cplusplus
}
#endif

#endif
