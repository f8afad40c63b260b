#ifndef PTL_H
#define PTL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum PtlStatus {
  PTL_STATUS_OK = 0,
  PTL_STATUS_NULL_POINTER = 1,
  PTL_STATUS_INVALID_UTF8 = 2,
  PTL_STATUS_PARSE_ERROR = 3,
  PTL_STATUS_NON_PLANAR = 4,
  PTL_STATUS_INVALID_ARGUMENT = 5,
  PTL_STATUS_CEILING_EXCEEDED = 6,
  PTL_STATUS_BUFFER_TOO_SMALL = 7,
  PTL_STATUS_PANIC = 8,
} PtlStatus;

/**
 * An abstract simple graph.
 */
typedef struct PtlGraph PtlGraph;

/**
 * A graph with a fixed embedding and outer face.
 */
typedef struct PtlPlaneGraph PtlPlaneGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Human-readable name of a status code. The string is static.
 */
const char *ptl_status_name(enum PtlStatus status);

/**
 * Copies the message of the last failure on this thread into `buf`.
 *
 * # Safety
 * `buf` must point to `cap` writable bytes or be null; `needed` must be
 * null or writable.
 */
enum PtlStatus ptl_last_error(char *buf, size_t cap, size_t *needed);

/**
 * Parses a graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PtlStatus ptl_graph_from_graph6(const char *text, struct PtlGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
 *
 * # Safety
 * `endpoints` must point to `2 * m` values (or be null when `m` is 0);
 * `out` must be writable.
 */
enum PtlStatus ptl_graph_from_edges(size_t n,
                                    const uint32_t *endpoints,
                                    size_t m,
                                    struct PtlGraph **out);

/**
 * The graph `name` (for example "H5", "C3+Theta4", "W6").
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum PtlStatus ptl_pattern_graph(const char *name, struct PtlGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void ptl_graph_free(struct PtlGraph *g);

/**
 * Order and size of a graph.
 *
 * # Safety
 * `g` must be a live handle; `order` and `size` must be writable.
 */
enum PtlStatus ptl_graph_counts(const struct PtlGraph *g, size_t *order, size_t *size);

/**
 * Writes the graph6 encoding of `g` into `buf`.
 *
 * # Safety
 * `g` must be a live handle; `buf` must point to `cap` writable bytes or be
 * null; `needed` must be null or writable.
 */
enum PtlStatus ptl_graph_to_graph6(const struct PtlGraph *g, char *buf, size_t cap, size_t *needed);

/**
 * Whether `g` is planar.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PtlStatus ptl_is_planar(const struct PtlGraph *g, bool *out);

/**
 * Whether `g` has no subgraph isomorphic to `h`.
 *
 * # Safety
 * `g` and `h` must be live handles; `out` must be writable.
 */
enum PtlStatus ptl_is_free(const struct PtlGraph *g, const struct PtlGraph *h, bool *out);

/**
 * A plane embedding of a connected planar graph.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PtlStatus ptl_embed(const struct PtlGraph *g, struct PtlPlaneGraph **out);

/**
 * Builds a named family member (see `ptl family gen`). `params` is a
 * comma-separated list such as "k=4" or "x=2,y=1"; it may be null or empty.
 *
 * # Safety
 * `name` must be a NUL-terminated string, `params` NUL-terminated or null;
 * `out` must be writable.
 */
enum PtlStatus ptl_family_generate(const char *name,
                                   const char *params,
                                   struct PtlPlaneGraph **out);

/**
 * Releases a plane graph. Null is ignored.
 *
 * # Safety
 * `pg` must come from this library and not be used afterwards.
 */
void ptl_plane_free(struct PtlPlaneGraph *pg);

/**
 * Copies the underlying graph of a plane graph into a new handle.
 *
 * # Safety
 * `pg` must be a live handle; `out` must be writable.
 */
enum PtlStatus ptl_plane_graph(const struct PtlPlaneGraph *pg, struct PtlGraph **out);

/**
 * Number of faces and of 3-faces (the outer face included).
 *
 * # Safety
 * `pg` must be a live handle; `faces` and `triangles` must be writable.
 */
enum PtlStatus ptl_plane_face_counts(const struct PtlPlaneGraph *pg,
                                     size_t *faces,
                                     size_t *triangles);

/**
 * Largest triangle density over the triangular components, as a reduced
 * fraction. A graph without 3-faces gives 0/1.
 *
 * # Safety
 * `pg` must be a live handle; `num` and `den` must be writable.
 */
enum PtlStatus ptl_plane_max_density(const struct PtlPlaneGraph *pg, int64_t *num, int64_t *den);

/**
 * Exact planar Turán number ex_P(n, pattern). `workers` of 0 uses every
 * available core.
 *
 * # Safety
 * `pattern` must be a NUL-terminated string; `ex` must be writable.
 */
enum PtlStatus ptl_exact_turan(size_t n,
                               const char *pattern,
                               size_t ceiling,
                               size_t workers,
                               size_t *ex);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PTL_H */
