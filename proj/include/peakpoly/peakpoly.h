/*
 * C interface to the peakpoly library.
 *
 * Every function returns a pp_status. On failure a description is available
 * from pp_last_error() on the calling thread until the next call. Handles are
 * opaque and owned by the caller; strings returned through char** outputs are
 * released with pp_string_free(). Peak sets are arrays of strictly increasing
 * 1-based positions.
 */
#ifndef PEAKPOLY_H
#define PEAKPOLY_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PEAKPOLY_BUILDING)
#    define PP_API __declspec(dllexport)
#  else
#    define PP_API __declspec(dllimport)
#  endif
#else
#  define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
    PP_OK = 0,
    PP_ERR_INVALID_ARGUMENT = 1,
    PP_ERR_INADMISSIBLE = 2,
    PP_ERR_DISAGREEMENT = 3,
    PP_ERR_RESOURCE_LIMIT = 4,
    PP_ERR_IO = 5,
    PP_ERR_INTERNAL = 6
} pp_status;

typedef enum pp_format {
    PP_FORMAT_TEXT = 0,
    PP_FORMAT_JSON = 1,
    PP_FORMAT_CSV = 2
} pp_format;

typedef enum pp_count_method {
    PP_COUNT_FORMULA = 0,
    PP_COUNT_RECURSION = 1,
    PP_COUNT_BRUTE = 2
} pp_count_method;

/* Check bits for pp_verify / pp_sweep_run. */
#define PP_CHECK_POSITIVITY 1u
#define PP_CHECK_LOGCONCAVITY 2u
#define PP_CHECK_COUNTS 4u

typedef struct pp_context pp_context;
typedef struct pp_poly pp_poly;
typedef struct pp_table pp_table;
typedef struct pp_report pp_report;
typedef struct pp_sweep pp_sweep;

PP_API const char* pp_status_string(pp_status status);
PP_API const char* pp_last_error(void);
PP_API void pp_string_free(char* s);

/* Context: enumeration cap and shared polynomial cache. The initial cap is read
 * from PEAKPOLY_ENUM_CAP when set, otherwise 10. */
PP_API pp_status pp_context_create(pp_context** out);
PP_API void pp_context_destroy(pp_context* ctx);
PP_API pp_status pp_context_set_enumeration_cap(pp_context* ctx, int cap);
PP_API int pp_context_enumeration_cap(const pp_context* ctx);
/* 0 = unbounded. Resets the cache. */
PP_API pp_status pp_context_set_cache_limit(pp_context* ctx, size_t max_entries);

/* Parses "3,5,8" into `positions` (capacity entries). *count receives the size. */
PP_API pp_status pp_parse_peak_set(const char* text, int* positions, size_t capacity, size_t* count);
/* 1 if the set is structurally admissible, 0 otherwise; *reason (may be NULL)
 * receives an explanation for inadmissible sets. */
PP_API pp_status pp_check_admissible(const int* set, size_t len, int* admissible, char** reason);

/* Peak polynomials. */
PP_API pp_status pp_poly_create(pp_context* ctx, const int* set, size_t len, pp_poly** out);
PP_API pp_status pp_poly_from_json(const char* json, pp_poly** out);
PP_API pp_status pp_poly_recenter(const pp_poly* p, long center, pp_poly** out);
PP_API pp_status pp_poly_difference(const pp_poly* p, int order, pp_poly** out);
PP_API pp_status pp_poly_evaluate(const pp_poly* p, long x, char** out_decimal);
PP_API long pp_poly_center(const pp_poly* p);
/* -1 for the zero polynomial. */
PP_API int pp_poly_degree(const pp_poly* p);
PP_API pp_status pp_poly_render(const pp_poly* p, pp_format format, char** out);
PP_API void pp_poly_destroy(pp_poly* p);

/* Forward-difference tables: cell (j, k) = (Delta^j p)(k). */
PP_API pp_status pp_table_create(const pp_poly* p, int jmax, long kmin, long kmax, pp_table** out);
PP_API pp_status pp_table_cell(const pp_table* t, int j, long k, char** out_decimal);
PP_API pp_status pp_table_render(const pp_table* t, pp_format format, char** out);
PP_API void pp_table_destroy(pp_table* t);

/* |{pi in S_n : P(pi) = S}| as a decimal string. */
PP_API pp_status pp_count(pp_context* ctx, const int* set, size_t len, int n, pp_count_method method,
                          char** out_decimal);

/* All permutations of S_n, grouped by peak set (grouped != 0) or listed one per line. */
PP_API pp_status pp_enumerate(pp_context* ctx, int n, int grouped, pp_format format, char** out);

/* Verification of one set. k_span / n_span bound the ranges k <= m + k_span and n <= m + n_span. */
PP_API pp_status pp_verify(pp_context* ctx, const int* set, size_t len, unsigned checks, int k_span, int n_span,
                           pp_report** out);
PP_API int pp_report_passed(const pp_report* r);
PP_API pp_status pp_report_render(const pp_report* r, pp_format format, char** out);
PP_API void pp_report_destroy(pp_report* r);

/* Sweep over every admissible set with max(S) <= m_max. */
PP_API pp_status pp_sweep_run(pp_context* ctx, int m_max, unsigned checks, int jobs, pp_sweep** out);
PP_API size_t pp_sweep_sets_checked(const pp_sweep* s);
PP_API size_t pp_sweep_failure_count(const pp_sweep* s);
PP_API double pp_sweep_elapsed_seconds(const pp_sweep* s);
PP_API pp_status pp_sweep_render(const pp_sweep* s, pp_format format, char** out);
PP_API void pp_sweep_destroy(pp_sweep* s);

/* Writes `contents` to `path` through a temporary file and rename. */
PP_API pp_status pp_write_file_atomic(const char* path, const char* contents);

#ifdef __cplusplus
}
#endif

#endif /* PEAKPOLY_H */
