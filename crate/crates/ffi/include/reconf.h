#ifndef RECONF_H
#define RECONF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum RcStatus {
  RC_STATUS_OK = 0,
  /**
   * A sequence or bound was rejected.
   */
  RC_STATUS_SEMANTIC = 1,
  /**
   * Malformed text, out-of-range vertex, or an unsupported request.
   */
  RC_STATUS_INPUT = 2,
  /**
   * The instance exceeds the size cap of an exact procedure.
   */
  RC_STATUS_RESOURCE = 3,
  /**
   * A required pointer argument was null.
   */
  RC_STATUS_NULL_POINTER = 4,
  /**
   * The library panicked; the handle involved should be discarded.
   */
  RC_STATUS_PANIC = 5,
} RcStatus;

/**
 * Reconfiguration rule.
 */
typedef enum RcModel {
  /**
   * Token jumping with jumps of up to k tokens.
   */
  RC_MODEL_MTJ = 0,
  /**
   * Token addition and removal with a buffer of up to k tokens.
   */
  RC_MODEL_TAR = 1,
} RcModel;

/**
 * Constructive reconfiguration algorithm.
 */
typedef enum RcMethod {
  RC_METHOD_VERTEX_COVER = 0,
  RC_METHOD_BISTABLE = 1,
  RC_METHOD_FOREST = 2,
  RC_METHOD_FEEDBACK_VERTEX_SET = 3,
  RC_METHOD_PATHWIDTH = 4,
} RcMethod;

/**
 * Opaque graph handle.
 */
typedef struct RcGraph RcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null after a success.
 * The pointer stays valid until the next library call on this thread.
 */
const char *rc_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *rc_version(void);

/**
 * Creates an edgeless graph on `n` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum RcStatus rc_graph_new(uintptr_t n, struct RcGraph **out);

/**
 * Parses the edge-list text format (`n m` header, then `m` lines `u v`).
 *
 * # Safety
 * `text` must be NUL-terminated and `out` writable.
 */
enum RcStatus rc_graph_parse(const char *text_ptr, struct RcGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a live handle, not used afterwards.
 */
void rc_graph_free(struct RcGraph *g);

/**
 * Adds the edge `u v`.
 *
 * # Safety
 * `g` must be a live handle not used concurrently.
 */
enum RcStatus rc_graph_add_edge(struct RcGraph *g, uintptr_t u, uintptr_t v);

/**
 * Writes the vertex and edge counts.
 *
 * # Safety
 * `g` must be a live handle; `n` and `m` writable.
 */
enum RcStatus rc_graph_size(const struct RcGraph *g, uintptr_t *n, uintptr_t *m);

/**
 * Exact reconfiguration threshold over all set sizes, refused with
 * [`RcStatus::Resource`] when the graph has more than `cap` vertices.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum RcStatus rc_threshold(const struct RcGraph *g,
                           enum RcModel model,
                           uintptr_t cap,
                           uintptr_t *out);

/**
 * Largest rank of an induced bistable subgraph.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum RcStatus rc_bistable_rank(const struct RcGraph *g, uintptr_t cap, uintptr_t *out);

/**
 * Vertex count of a largest pumpkin subgraph (0 if none).
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum RcStatus rc_pumpkin_number(const struct RcGraph *g, uintptr_t cap, uintptr_t *out);

/**
 * Reconfigures the independent set `source` into `target` with `method`.
 * Jump-based methods can be rendered under either model; the feedback
 * vertex set and pathwidth methods only under [`RcModel::Tar`]. Writes the
 * sequence in text form (release with [`rc_string_free`]) and its largest
 * jump or buffer.
 *
 * # Safety
 * `g` must be a live handle; `source`/`target` point to `source_len`/
 * `target_len` readable ids (or are null with length 0); `out_text` and
 * `out_cost` are writable.
 */
enum RcStatus rc_reconfigure(const struct RcGraph *g,
                             enum RcMethod method,
                             enum RcModel model,
                             const uintptr_t *source,
                             uintptr_t source_len,
                             const uintptr_t *target,
                             uintptr_t target_len,
                             char **out_text,
                             uintptr_t *out_cost);

/**
 * Checks a sequence in text form (`t`, then `t` vertex-set lines) from the
 * set given by `source_text` to `target_text` (vertex-set lines). Writes the
 * largest jump or buffer; a rejected sequence returns [`RcStatus::Semantic`]
 * with the violation in [`rc_last_error`].
 *
 * # Safety
 * `g` must be a live handle; the texts NUL-terminated; `out_cost` writable.
 */
enum RcStatus rc_verify_sequence(const struct RcGraph *g,
                                 enum RcModel model,
                                 const char *source_text,
                                 const char *target_text,
                                 const char *sequence_text,
                                 uintptr_t *out_cost);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library, not used afterwards.
 */
void rc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RECONF_H */
