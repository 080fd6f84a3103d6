#ifndef INTGRAPH_H
#define INTGRAPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the first four match the command-line exit codes.
 */
typedef enum {
  /**
   * Positive verdict, or plain success.
   */
  IG_STATUS_OK = 0,
  /**
   * Negative verdict; the JSON output holds the certificate.
   */
  IG_STATUS_NEGATIVE = 1,
  IG_STATUS_INPUT_ERROR = 2,
  IG_STATUS_INTERNAL = 3,
  IG_STATUS_NULL_POINTER = 4,
} IgStatus;

/**
 * Opaque graph handle.
 */
typedef struct IgGraph IgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` points to `2 * edge_count` readable values (may be null when
 * `edge_count` is 0); `out` is valid for a write.
 */
IgStatus ig_graph_new(size_t n, const size_t *edges, size_t edge_count, IgGraph **out);

/**
 * Parses `{"n": .., "edges": [[u, v], ..], "labels": {..}}`.
 *
 * # Safety
 * `json` is a nul-terminated string; `out` is valid for a write.
 */
IgStatus ig_graph_from_json(const char *json, IgGraph **out);

/**
 * Parses the edge-list text format: vertex count, then one `u v` per line.
 *
 * # Safety
 * `text` is a nul-terminated string; `out` is valid for a write.
 */
IgStatus ig_graph_from_edge_list(const char *text, IgGraph **out);

/**
 * # Safety
 * `g` is null or a live handle; it must not be used afterwards.
 */
void ig_graph_free(IgGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` is null or a live handle.
 */
size_t ig_graph_vertex_count(const IgGraph *g);

/**
 * The graph as JSON.
 *
 * # Safety
 * `g` is a live handle; `out_json` is valid for a write.
 */
IgStatus ig_graph_to_json(const IgGraph *g, char **out_json);

/**
 * `IG_STATUS_OK` with a representation, or `IG_STATUS_NEGATIVE` with an
 * obstruction certificate. `out_json` may be null.
 *
 * # Safety
 * `g` is a live handle; `out_json` is null or valid for a write.
 */
IgStatus ig_recognize(const IgGraph *g, char **out_json);

/**
 * Unique orderability. `IG_STATUS_OK` when unique, `IG_STATUS_NEGATIVE`
 * otherwise; the JSON is the verdict, or the obstruction when the graph is
 * not an interval graph. Either out-pointer may be null.
 *
 * # Safety
 * `g` is a live handle; out-pointers are null or valid for a write.
 */
IgStatus ig_decide_unique(const IgGraph *g, bool *out_unique, char **out_json);

/**
 * `IG_STATUS_OK` when a buried subgraph exists, `IG_STATUS_NEGATIVE` when
 * none does. The graph must be a connected interval graph.
 *
 * # Safety
 * `g` is a live handle; `out_json` is null or valid for a write.
 */
IgStatus ig_find_buried(const IgGraph *g, char **out_json);

/**
 * Number of components of the pair graph.
 *
 * # Safety
 * `g` is a live handle; `out` is valid for a write.
 */
IgStatus ig_wq_component_count(const IgGraph *g, size_t *out);

/**
 * Counts associated orders by exhaustive search; refuses graphs with more
 * than `max_n` vertices.
 *
 * # Safety
 * `g` is a live handle; out-pointers are null or valid for a write.
 */
IgStatus ig_count_orders(const IgGraph *g,
                         size_t max_n,
                         size_t *out_orders,
                         size_t *out_dual_classes);

/**
 * Coded gadget for the `len` values of `f` over `stages` stages, as JSON.
 *
 * # Safety
 * `f` points to `len` readable values (may be null when `len` is 0);
 * `out_json` is valid for a write.
 */
IgStatus ig_gadget(const uint64_t *f, size_t len, size_t stages, char **out_json);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` is null or a string from this library that has not been freed.
 */
void ig_string_free(char *s);

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next call into this library on the same thread.
 */
const char *ig_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *ig_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTGRAPH_H */
