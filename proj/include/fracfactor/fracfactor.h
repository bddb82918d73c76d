/*
 * C interface to the fracfactor library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_destroy function. Every fallible call returns an ff_status; on
 * failure ff_last_error() describes the problem for the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with ff_string_free().
 */
#ifndef FRACFACTOR_H
#define FRACFACTOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FRACFACTOR_BUILDING)
#    define FF_API __declspec(dllexport)
#  else
#    define FF_API __declspec(dllimport)
#  endif
#else
#  define FF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ff_status {
  FF_OK = 0,
  FF_ERROR_INPUT = 1,         /* malformed graph, bad parameters, bad indices */
  FF_ERROR_RESOURCE = 2,      /* order above a brute-force or criticality cap */
  FF_ERROR_PRECONDITION = 3,  /* call outside its documented precondition */
  FF_ERROR_INCONSISTENT = 4,  /* a proved property failed on a concrete input */
  FF_ERROR_INTERNAL = 5
} ff_status;

typedef enum ff_format { FF_FORMAT_TEXT = 0, FF_FORMAT_JSON = 1 } ff_format;

typedef enum ff_construction { FF_REMARK1 = 1, FF_REMARK2 = 2 } ff_construction;

typedef struct ff_graph ff_graph;
typedef struct ff_labels ff_labels;
typedef struct ff_report ff_report;

typedef struct ff_limits {
  int brute_force_limit;
  int criticality_limit;
} ff_limits;

FF_API void ff_limits_default(ff_limits* out);

FF_API const char* ff_last_error(void);
FF_API const char* ff_status_name(ff_status status);
FF_API void ff_string_free(char* s);

/* Graphs, in the `n m` + `u v` edge-list format. */
FF_API ff_status ff_graph_parse(const char* text, size_t length, ff_graph** out);
FF_API ff_status ff_graph_load(const char* path, ff_graph** out);
/* `endpoints` holds 2 * edge_count vertex indices. */
FF_API ff_status ff_graph_from_edges(int order, const int* endpoints, size_t edge_count,
                                     ff_graph** out);
FF_API void ff_graph_destroy(ff_graph* graph);
FF_API ff_status ff_graph_order(const ff_graph* graph, int* out);
FF_API ff_status ff_graph_edge_count(const ff_graph* graph, size_t* out);
FF_API ff_status ff_graph_degree(const ff_graph* graph, int vertex, int* out);
FF_API ff_status ff_graph_min_degree(const ff_graph* graph, int* out);
FF_API ff_status ff_graph_format(const ff_graph* graph, char** out);
FF_API ff_status ff_graph_save(const ff_graph* graph, const char* path);

/* Generators. `labels` may be NULL when the caller does not want them. */
FF_API ff_status ff_generate_construction(ff_construction kind, int a, int b, int t,
                                          ff_graph** graph, ff_labels** labels);
FF_API ff_status ff_generate_random(int order, int64_t p_numerator, int64_t p_denominator,
                                    uint64_t seed, ff_graph** out);
/* JSON sidecar mapping part names to [begin, end) index ranges. */
FF_API ff_status ff_labels_format(const ff_labels* labels, char** out);
FF_API ff_status ff_labels_part(const ff_labels* labels, const char* name, int* begin, int* end);
FF_API void ff_labels_destroy(ff_labels* labels);

/* delta(S,T) = b|S| + d_{G-S}(T) - a|T| with T derived from S. */
FF_API ff_status ff_delta_st(const ff_graph* graph, int a, int b, const int* s, size_t s_size,
                             int64_t* delta, size_t* t_size);
/* Brute-force oracle: *feasible is 1 or 0, *delta the most negative value. */
FF_API ff_status ff_bruteforce_factor(const ff_graph* graph, int a, int b, const ff_limits* limits,
                                      int* feasible, int64_t* delta);
/* Sets *valid to 1 when the `u v p/q` assignment is a fractional [a,b]-factor. */
FF_API ff_status ff_validate_assignment(const ff_graph* graph, int a, int b, const char* text,
                                        size_t length, int* valid);
FF_API ff_status ff_corollary_min_order(int k, int64_t* out);

/* Reports. `limits` may be NULL for the defaults. */
FF_API ff_status ff_check_factor(const ff_graph* graph, int a, int b, const ff_limits* limits,
                                 int include_witness, ff_report** out);
FF_API ff_status ff_check_critical(const ff_graph* graph, int a, int b, const ff_limits* limits,
                                   ff_report** out);
FF_API ff_status ff_check_hypotheses(const ff_graph* graph, int a, int b, ff_report** out);
FF_API ff_status ff_verify_sharpness(ff_construction kind, int a, int b, int t,
                                     const ff_limits* limits, ff_report** out);
/* Runs a sweep from config text. Non-NULL `limits` override the config's
 * caps. The JSON summary is also written to the config's `output` path. */
FF_API ff_status ff_verify_theorem(const char* config_text, size_t length, const ff_limits* limits,
                                   ff_report** out);
FF_API ff_status ff_verify_theorem_file(const char* path, const ff_limits* limits, ff_report** out);

FF_API ff_status ff_report_holds(const ff_report* report, int* out);
FF_API ff_status ff_report_render(const ff_report* report, ff_format format, char** out);
FF_API void ff_report_destroy(ff_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FRACFACTOR_H */
