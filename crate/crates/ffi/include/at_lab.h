#ifndef AT_LAB_H
#define AT_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum AtStatus {
  AT_STATUS_OK = 0,
  // A required pointer argument was null.
  AT_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  AT_STATUS_INVALID_UTF8 = 2,
  // Expression syntax or evaluation error.
  AT_STATUS_PARSE = 3,
  // Input violates a precondition (bad family parameters, bad edits...).
  AT_STATUS_PRECONDITION = 4,
  // The instance exceeds a solver size limit.
  AT_STATUS_RESOURCE = 5,
  // Malformed graph6 or JSON input.
  AT_STATUS_DECODE = 6,
  // Internal error; the call was abandoned.
  AT_STATUS_PANIC = 7,
} AtStatus;

// Opaque simple graph.
typedef struct AtGraph AtGraph;

// Opaque digraph with its annotations.
typedef struct AtOrientation AtOrientation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread ("" after a success).
// Valid until the next `at_*` call on the same thread.
const char *at_last_error_message(void);

// Library version, a static string.
const char *at_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from an `at_*` out-parameter and not be freed twice.
void at_string_free(char *s);

// Evaluates a graph expression such as `"C(5) x P(3)"`.
//
// # Safety
// `expr` must be a nul-terminated string; `out` a valid pointer.
enum AtStatus at_graph_parse(const char *expr, struct AtGraph **out);

// Decodes one graph6 record of `len` bytes.
//
// # Safety
// `bytes` must point to `len` readable bytes; `out` a valid pointer.
enum AtStatus at_graph_from_graph6(const uint8_t *bytes, size_t len, struct AtGraph **out);

// # Safety
// `g` must be null or a handle from this library, not yet freed.
void at_graph_free(struct AtGraph *g);

// Vertex count; 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t at_graph_vertex_count(const struct AtGraph *g);

// Edge count; 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t at_graph_edge_count(const struct AtGraph *g);

// JSON form `{"n", "labels", "edges"}`; free with `at_string_free`.
//
// # Safety
// `g` must be a live handle; `out` a valid pointer.
enum AtStatus at_graph_to_json(const struct AtGraph *g, char **out);

// graph6 record without a trailing newline; free with `at_string_free`.
//
// # Safety
// `g` must be a live handle; `out` a valid pointer.
enum AtStatus at_graph_to_graph6(const struct AtGraph *g, char **out);

// Chromatic number.
//
// # Safety
// `g` must be a live handle; `out` a valid pointer.
enum AtStatus at_chromatic_number(const struct AtGraph *g, size_t *out);

// Exact Alon-Tarsi number; `AT_STATUS_RESOURCE` when the instance is too
// large for the coefficient expansion.
//
// # Safety
// `g` must be a live handle; `out` a valid pointer.
enum AtStatus at_alon_tarsi_number(const struct AtGraph *g, size_t *out);

// The augmented orientation `D*` of `C(2k+1) x P(n)` (with `e*`).
//
// # Safety
// `out` must be a valid pointer.
enum AtStatus at_orient_thm21(size_t k, size_t n, struct AtOrientation **out);

// Parses the JSON orientation format `{"n", "arcs", ...}`.
//
// # Safety
// `json` must be a nul-terminated string; `out` a valid pointer.
enum AtStatus at_orientation_from_json(const char *json, struct AtOrientation **out);

// # Safety
// `d` must be null or a handle from this library, not yet freed.
void at_orientation_free(struct AtOrientation *d);

// Arc count; 0 for a null handle.
//
// # Safety
// `d` must be null or a live handle.
size_t at_orientation_arc_count(const struct AtOrientation *d);

// Largest indegree; 0 for a null handle.
//
// # Safety
// `d` must be null or a live handle.
size_t at_orientation_max_indegree(const struct AtOrientation *d);

// JSON form of the orientation; free with `at_string_free`.
//
// # Safety
// `d` must be a live handle; `out` a valid pointer.
enum AtStatus at_orientation_to_json(const struct AtOrientation *d, char **out);

// Even and odd circulation counts by exhaustive enumeration.
//
// # Safety
// `d` must be a live handle; `even` and `odd` valid pointers.
enum AtStatus at_census_enumerate(const struct AtOrientation *d, uint64_t *even, uint64_t *odd);

// `|even - odd|` in decimal, from the frontier DP (no arc limit of its
// own); free with `at_string_free`.
//
// # Safety
// `d` must be a live handle; `out` a valid pointer.
enum AtStatus at_census_diff_magnitude(const struct AtOrientation *d, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AT_LAB_H */
