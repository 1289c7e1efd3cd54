#ifndef GRAPH_INERTIA_H
#define GRAPH_INERTIA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of every fallible call.
 */
typedef enum GiStatus {
  GI_STATUS_OK = 0,
  GI_STATUS_NULL_POINTER = 1,
  GI_STATUS_INVALID_UTF8 = 2,
  GI_STATUS_FORMAT = 3,
  GI_STATUS_DOMAIN = 4,
  GI_STATUS_NUMERIC = 5,
  GI_STATUS_RESOURCE = 6,
  GI_STATUS_INTERNAL = 7,
  GI_STATUS_BUFFER_TOO_SMALL = 8,
  GI_STATUS_PANIC = 9,
} GiStatus;

/*
 Opaque graph handle.
 */
typedef struct GiGraph GiGraph;

/*
 Scalar spectral invariants of a graph.
 */
typedef struct GiSummary {
  size_t n;
  size_t m;
  size_t components;
  size_t positive;
  size_t negative;
  size_t zero;
  double s_plus;
  double s_minus;
  double energy;
  double spectral_radius;
  double tau;
  double b_value;
  /*
   `min(s-, s+) - (n - components)`.
   */
  double slack;
} GiSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or NULL. Valid until the
 next call into this library on the same thread.
 */
const char *gi_last_error_message(void);

/*
 # Safety
 `s` must be NULL or a string returned by this library, not yet freed.
 */
void gi_string_free(char *s);

/*
 # Safety
 `g` must be NULL or a live handle from this library; it is invalid afterwards.
 */
void gi_graph_free(struct GiGraph *g);

/*
 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum GiStatus gi_graph_from_graph6(const char *text, struct GiGraph **out);

/*
 Graph on `n` vertices with edges `(edges[2i], edges[2i+1])` for
 `i < edge_count`.

 # Safety
 `edges` must point to `2 * edge_count` readable values (may be NULL when
 `edge_count` is 0); `out` must be writable.
 */
enum GiStatus gi_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct GiGraph **out);

/*
 Family member by name: `complete`, `cycle`, `path`, `star`, `barbell`
 (one parameter), `complete-bipartite` (two), `complete-q-partite` (part
 sizes), `circulant` (n then offsets), `petersen` (none).

 # Safety
 `name` must be a NUL-terminated string, `params` must point to `count`
 readable values (may be NULL when `count` is 0), `out` must be writable.
 */
enum GiStatus gi_family(const char *name, const size_t *params, size_t count, struct GiGraph **out);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum GiStatus gi_graph_to_graph6(const struct GiGraph *g, char **out);

/*
 Vertex count, or 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
size_t gi_graph_vertex_count(const struct GiGraph *g);

/*
 Edge count, or 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
size_t gi_graph_edge_count(const struct GiGraph *g);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum GiStatus gi_summarize(const struct GiGraph *g, struct GiSummary *out);

/*
 Eigenvalues in descending order into `buf` (capacity `len`). `*written`
 receives `n`, also on `BufferTooSmall`.

 # Safety
 `g` must be a live handle, `buf` must have `len` writable entries,
 `written` must be writable.
 */
enum GiStatus gi_eigenvalues(const struct GiGraph *g, double *buf, size_t len, size_t *written);

/*
 `min(s-, s+) - (n - components)`.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum GiStatus gi_conjecture_slack(const struct GiGraph *g, double *out);

/*
 Full bound report as JSON. `tol <= 0` selects the default tolerance.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum GiStatus gi_bounds_report_json(const struct GiGraph *g, bool with_chi, double tol, char **out);

/*
 Twin quotient as a new handle, with class sizes written to
 `multiplicities` (capacity `len`). `*written` receives the quotient's
 vertex count, also on `BufferTooSmall` (no handle is created then).

 # Safety
 `g` must be a live handle, `multiplicities` must have `len` writable
 entries, `written` and `quotient` must be writable.
 */
enum GiStatus gi_quotient(const struct GiGraph *g,
                          struct GiGraph **quotient,
                          size_t *multiplicities,
                          size_t len,
                          size_t *written);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GRAPH_INERTIA_H */
