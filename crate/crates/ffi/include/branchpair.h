#ifndef BRANCHPAIR_H
#define BRANCHPAIR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BpStatus {
  BP_STATUS_OK = 0,
  BP_STATUS_NULL_POINTER = 1,
  BP_STATUS_INVALID_UTF8 = 2,
  BP_STATUS_PARSE = 3,
  BP_STATUS_VALIDATION = 4,
  BP_STATUS_ARGUMENT = 5,
  BP_STATUS_RESOURCE_LIMIT = 6,
  BP_STATUS_CONSTRUCTION_GAP = 7,
  BP_STATUS_BUFFER_TOO_SMALL = 8,
  BP_STATUS_PANIC = 9,
} BpStatus;

/**
 * Opaque digraph handle.
 */
typedef struct BpDigraph BpDigraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into the library on this thread.
 */
const char *bp_last_error(void);

/**
 * Parses an arc-list document.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BpStatus bp_digraph_parse(const char *text, struct BpDigraph **out);

/**
 * Builds a catalog digraph by name (`s4`, `combo_iv_ii_dashed`, ...).
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BpStatus bp_catalog_build(const char *name, struct BpDigraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `handle` must come from this library and not be used afterwards.
 */
void bp_digraph_free(struct BpDigraph *handle);

/**
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum BpStatus bp_digraph_vertex_count(const struct BpDigraph *handle, size_t *out);

/**
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum BpStatus bp_digraph_arc_count(const struct BpDigraph *handle, size_t *out);

/**
 * # Safety
 * `handle` must be a live handle and `k` a valid pointer.
 */
enum BpStatus bp_arc_strong_connectivity(const struct BpDigraph *handle, uint32_t *k);

/**
 * Decides whether a good `(u, v)`-pair exists (vertex indices). When it
 * does and the buffers are non-NULL, the arc ids of the out- and
 * in-branching are written to `out_arcs` / `in_arcs`, each of which must
 * hold `vertex_count - 1` entries.
 *
 * # Safety
 * `handle` must be live, `found` valid, and non-NULL buffers large enough.
 */
enum BpStatus bp_find_good_pair(const struct BpDigraph *handle,
                                size_t u,
                                size_t v,
                                bool *found,
                                size_t *out_arcs,
                                size_t *in_arcs);

/**
 * Writes the good-pair matrix row-major into `cells` (row = out-root,
 * column = in-root); `len` must be at least `vertex_count^2`.
 *
 * # Safety
 * `handle` must be live and `cells` point to `len` writable booleans.
 */
enum BpStatus bp_good_pair_matrix(const struct BpDigraph *handle, bool *cells, size_t len);

/**
 * Exhaustive strong arc decomposition search; fails with
 * `ResourceLimit` beyond `BRANCHPAIR_LIMIT` bipartitions.
 *
 * # Safety
 * `handle` must be live and `found` a valid pointer.
 */
enum BpStatus bp_has_strong_arc_decomposition(const struct BpDigraph *handle, bool *found);

/**
 * Exhaustive verification report as JSON, certificates included. Free the
 * string with `bp_string_free`.
 *
 * # Safety
 * `handle` must be live and `out` a valid pointer.
 */
enum BpStatus bp_report_json(const struct BpDigraph *handle, char **out);

/**
 * Releases a string returned by the library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void bp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRANCHPAIR_H */
