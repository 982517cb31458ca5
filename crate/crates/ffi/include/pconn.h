#ifndef PCONN_H
#define PCONN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PconnStatus {
  PCONN_STATUS_OK = 0,
  PCONN_STATUS_INVALID_ARGUMENT = 1,
  PCONN_STATUS_PARSE = 2,
  PCONN_STATUS_DISCONNECTED = 3,
  PCONN_STATUS_BUDGET = 4,
  PCONN_STATUS_NULL_POINTER = 5,
  PCONN_STATUS_BUFFER_TOO_SMALL = 6,
  PCONN_STATUS_INTERNAL = 7,
} PconnStatus;

/**
 * Opaque graph handle.
 */
typedef struct PconnGraph PconnGraph;

/**
 * Parses one graph6 string (NUL-terminated, optional `>>graph6<<` header).
 *
 * # Safety
 * `text` must be a valid C string and `out` a writable pointer.
 */
enum PconnStatus pconn_graph_from_graph6(const char *text, struct PconnGraph **out);

/**
 * Builds a graph on `vertex_count` vertices from `edge_count` pairs stored
 * flat in `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0) and `out` must be writable.
 */
enum PconnStatus pconn_graph_from_edges(size_t vertex_count,
                                        const size_t *edges,
                                        size_t edge_count,
                                        struct PconnGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void pconn_graph_free(struct PconnGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t pconn_graph_vertex_count(const struct PconnGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t pconn_graph_edge_count(const struct PconnGraph *g);

/**
 * Endpoints of edge `index`, with `*u < *v`.
 *
 * # Safety
 * `g` must be a live handle; `u` and `v` must be writable.
 */
enum PconnStatus pconn_graph_edge(const struct PconnGraph *g, size_t index, size_t *u, size_t *v);

/**
 * Exact proper connection number. When `colors` is non-null, an optimal
 * coloring is written there (`colors_len` must be at least the edge count).
 * `max_nodes` of 0 selects the default search budget.
 *
 * # Safety
 * `g` must be a live handle, `value` writable, and `colors` null or
 * writable for `colors_len` entries.
 */
enum PconnStatus pconn_pc_exact(const struct PconnGraph *g,
                                uint64_t max_nodes,
                                uint32_t *value,
                                uint32_t *colors,
                                size_t colors_len);

/**
 * Whether `colors` (one positive color per edge) joins every pair of
 * vertices by a proper path.
 *
 * # Safety
 * `g` must be a live handle, `colors` readable for `colors_len` entries
 * and `ok` writable.
 */
enum PconnStatus pconn_check_coloring(const struct PconnGraph *g,
                                      const uint32_t *colors,
                                      size_t colors_len,
                                      bool *ok);

/**
 * A minimum connected two-way two-step dominating set, written to `set`
 * in increasing order with its size in `size`. `*size` is 0 if none exists.
 *
 * # Safety
 * `g` must be a live handle, `set` writable for `set_len` entries and
 * `size` writable.
 */
enum PconnStatus pconn_min_two_step_dominating(const struct PconnGraph *g,
                                               size_t *set,
                                               size_t set_len,
                                               size_t *size);

/**
 * Copies the calling thread's last error message into `buf` (truncated,
 * always NUL-terminated when `buf_len > 0`) and returns its full length
 * in bytes, excluding the terminator.
 *
 * # Safety
 * `buf` must be null or writable for `buf_len` bytes.
 */
size_t pconn_last_error_message(char *buf, size_t buf_len);

#endif  /* PCONN_H */
