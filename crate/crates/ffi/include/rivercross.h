#ifndef RIVERCROSS_H
#define RIVERCROSS_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  /**
   * Labelled couples.
   */
  RC_FLAVOR_HW = 0,
  /**
   * Head counts.
   */
  RC_FLAVOR_MC = 1,
} RcFlavor;

typedef enum {
  RC_STATUS_OK = 0,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  RC_STATUS_NULL_OR_UTF8 = 1,
  RC_STATUS_INVALID_SIZE = 2,
  RC_STATUS_INVALID_CAPACITY = 3,
  RC_STATUS_CAP_EXCEEDED = 4,
  RC_STATUS_BUDGET_EXCEEDED = 5,
  RC_STATUS_PARSE = 6,
  RC_STATUS_INVALID_STEP = 7,
  /**
   * The goal state is unreachable.
   */
  RC_STATUS_INFEASIBLE = 8,
  /**
   * A count does not fit in 64 bits.
   */
  RC_STATUS_OVERFLOW = 9,
  RC_STATUS_INVALID = 10,
  /**
   * A Rust panic was caught at the boundary.
   */
  RC_STATUS_PANIC = 11,
} RcStatus;

/**
 * Opaque state graph.
 */
typedef struct RcGraph RcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Owned by the
 * library and valid until the next call on the same thread.
 */
const char *rc_last_error(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void rc_string_free(char *s);

/**
 * Smallest boat capacity that lets `n` couples cross.
 *
 * # Safety
 * `out_b` must be valid for writes.
 */
RcStatus rc_capacity(size_t n, size_t *out_b);

/**
 * Build the state graph for `n` couples and boat capacity `b` (`0` picks
 * the smallest working capacity). `max_n` caps the instance size (`0` for
 * the default cap).
 *
 * # Safety
 * `out_graph` must be valid for writes.
 */
RcStatus rc_graph_new(RcFlavor flavor, size_t n, size_t b, size_t max_n, RcGraph **out_graph);

/**
 * # Safety
 * `graph` must come from [`rc_graph_new`] and not have been freed. Null is ignored.
 */
void rc_graph_free(RcGraph *graph);

/**
 * Number of admissible states.
 *
 * # Safety
 * `graph` must be a live handle; `out_count` valid for writes.
 */
RcStatus rc_graph_state_count(const RcGraph *graph, size_t *out_count);

/**
 * Number of directed edges (each trip and its return count separately).
 *
 * # Safety
 * `graph` must be a live handle; `out_count` valid for writes.
 */
RcStatus rc_graph_edge_count(const RcGraph *graph, size_t *out_count);

/**
 * Size of the component reachable from the initial state, and whether it contains the goal.
 *
 * # Safety
 * `graph` must be a live handle; both out-pointers valid for writes.
 */
RcStatus rc_graph_reachability(const RcGraph *graph, size_t *out_component, bool *out_feasible);

/**
 * Shortest solution length and the number of shortest solutions.
 * Returns `Infeasible` when the goal is unreachable and `Overflow` when
 * the count needs more than 64 bits.
 *
 * # Safety
 * `graph` must be a live handle; both out-pointers valid for writes.
 */
RcStatus rc_graph_shortest(const RcGraph *graph, size_t *out_length, uint64_t *out_count);

/**
 * JSON report `{n, b, flavor, length, count, solutions}` listing at most `limit` solutions.
 *
 * # Safety
 * `graph` must be a live handle; `out_json` valid for writes. Free the result with [`rc_string_free`].
 */
RcStatus rc_graph_solutions_json(const RcGraph *graph,
                                 size_t limit,
                                 char **out_json);

/**
 * Graphviz source for the whole graph, or only the reachable component.
 *
 * # Safety
 * `graph` must be a live handle; `out_dot` valid for writes. Free the result with [`rc_string_free`].
 */
RcStatus rc_graph_dot(const RcGraph *graph,
                      bool component_only,
                      char **out_dot);

/**
 * Number of labelled solutions over a counting solution. `solution`
 * uses the solution-file formats of the command-line tool.
 *
 * # Safety
 * `solution` must be a NUL-terminated string; `out_count` valid for writes.
 */
RcStatus rc_fiber_count(size_t n, size_t b, const char *solution, uint64_t *out_count);

/**
 * Lift a counting solution: JSON `{solution, permutations, rotations_only}`.
 *
 * # Safety
 * `solution` must be a NUL-terminated string; `out_json` valid for writes.
 * Free the result with [`rc_string_free`].
 */
RcStatus rc_lift_json(size_t n, size_t b, const char *solution, char **out_json);

/**
 * Equivalence report for the labelled and counting categories with walks
 * of length `<= bound`. `out_ok` is true when every law and property holds.
 *
 * # Safety
 * Both out-pointers must be valid for writes. Free the result with [`rc_string_free`].
 */
RcStatus rc_catcheck_json(size_t n,
                          size_t b,
                          size_t bound,
                          uint64_t seed,
                          bool *out_ok,
                          char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIVERCROSS_H */
