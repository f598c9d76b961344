#ifndef PLANAR_TURAN_H
#define PLANAR_TURAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum PtStatus {
  PT_STATUS_OK = 0,
  PT_STATUS_NULL_POINTER = 1,
  PT_STATUS_INVALID_ARGUMENT = 2,
  PT_STATUS_MALFORMED_GRAPH6 = 3,
  PT_STATUS_OUT_OF_RANGE = 4,
  PT_STATUS_UNSUPPORTED_PATTERN = 5,
  PT_STATUS_VERIFICATION_FAILED = 6,
  PT_STATUS_INTERNAL = 7,
} PtStatus;

/**
 * Opaque exact search result handle.
 */
typedef struct PtExactResult PtExactResult;

/**
 * Opaque graph handle.
 */
typedef struct PtGraph PtGraph;

/**
 * Opaque double star witness handle.
 */
typedef struct PtWitness PtWitness;

/**
 * Proven bounds at one order. Absent sides have `has_* = false`.
 */
typedef struct PtBounds {
  bool has_lower;
  size_t lower;
  bool has_upper;
  size_t upper;
  /**
   * Whether `n` is inside the proven range.
   */
  bool valid;
  /**
   * Whether a negative lower formula was clamped to 0.
   */
  bool clamped;
} PtBounds;

/**
 * Conjectured value as the fraction `numerator / denominator`.
 */
typedef struct PtConjecture {
  int64_t numerator;
  int64_t denominator;
  /**
   * Floor of the value.
   */
  size_t count;
  /**
   * Only the main term is conjectured.
   */
  bool asymptotic;
} PtConjecture;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *pt_version(void);

/**
 * Message for the most recent failure on this thread. Valid until the next
 * failing call on the same thread.
 */
const char *pt_last_error_message(void);

/**
 * Parses one graph6 line.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum PtStatus pt_graph_from_graph6(const char *text, struct PtGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or may be null when
 * `edge_count` is 0); `out` must be valid for writes.
 */
enum PtStatus pt_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct PtGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void pt_graph_free(struct PtGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t pt_graph_vertex_count(const struct PtGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t pt_graph_edge_count(const struct PtGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be valid for writes.
 */
enum PtStatus pt_graph_degree(const struct PtGraph *g, size_t v, size_t *out);

/**
 * Whether `uv` is an edge; false for out-of-range vertices.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
bool pt_graph_has_edge(const struct PtGraph *g, size_t u, size_t v);

/**
 * graph6 encoding; release with [`pt_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid for writes.
 */
enum PtStatus pt_graph_to_graph6(const struct PtGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void pt_string_free(char *s);

/**
 * # Safety
 * `g` must be a live handle; `out` must be valid for writes.
 */
enum PtStatus pt_is_planar(const struct PtGraph *g, bool *out);

/**
 * Searches for S_{m,k}. Writes a witness handle, or null when the graph is
 * free of the pattern. The pattern is canonicalised so that `m <= k`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid for writes.
 */
enum PtStatus pt_find_double_star(const struct PtGraph *g,
                                  size_t m,
                                  size_t k,
                                  struct PtWitness **out);

/**
 * # Safety
 * `w` must be a live handle; `x` and `y` must be valid for writes.
 */
enum PtStatus pt_witness_backbone(const struct PtWitness *w, size_t *x, size_t *y);

/**
 * Copies the leaves of backbone end `side` (0 for x, 1 for y) into `buf`,
 * which holds `capacity` entries, and stores the leaf count in `len`. Fails
 * with `OutOfRange` when `capacity` is too small; `len` is still set.
 *
 * # Safety
 * `w` must be a live handle; `buf` must hold `capacity` writable entries;
 * `len` must be valid for writes.
 */
enum PtStatus pt_witness_leaves(const struct PtWitness *w,
                                uint32_t side,
                                size_t *buf,
                                size_t capacity,
                                size_t *len);

/**
 * # Safety
 * `w` must be null or a live handle.
 */
void pt_witness_free(struct PtWitness *w);

/**
 * Computes ex_P(n, S_{m,k}). `workers = 0` uses the available parallelism;
 * `node_budget = 0` means unlimited.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum PtStatus pt_exact(size_t n,
                       size_t m,
                       size_t k,
                       size_t workers,
                       uint64_t node_budget,
                       struct PtExactResult **out);

/**
 * # Safety
 * `r` must be null or a live handle.
 */
size_t pt_exact_result_value(const struct PtExactResult *r);

/**
 * Whether the search completed; false for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
bool pt_exact_result_is_exact(const struct PtExactResult *r);

/**
 * Number of extremal isomorphism classes, or -1 when unknown.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
int64_t pt_exact_result_extremal_classes(const struct PtExactResult *r);

/**
 * Number of stored extremal graphs.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
size_t pt_exact_result_extremal_count(const struct PtExactResult *r);

/**
 * # Safety
 * `r` must be null or a live handle.
 */
uint64_t pt_exact_result_nodes(const struct PtExactResult *r);

/**
 * Copy of stored extremal graph `index` as a new graph handle.
 *
 * # Safety
 * `r` must be a live handle; `out` must be valid for writes.
 */
enum PtStatus pt_exact_result_extremal(const struct PtExactResult *r,
                                       size_t index,
                                       struct PtGraph **out);

/**
 * # Safety
 * `r` must be null or a live handle.
 */
void pt_exact_result_free(struct PtExactResult *r);

/**
 * Builds and certifies a construction by family name (`k2star`,
 * `double-wheel`, `tri7`, `icosa`, `s35`). `n = 0` means unset.
 *
 * # Safety
 * `family` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum PtStatus pt_construct(const char *family, size_t n, size_t copies, struct PtGraph **out);

/**
 * Proven bounds for S_{m,k} at order `n`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum PtStatus pt_theorem_bounds(size_t m, size_t k, size_t n, struct PtBounds *out);

/**
 * Conjectured value of ex_P(n, S_{m,k}). `found` is false when no
 * conjecture covers the pattern at `n`.
 *
 * # Safety
 * `out` and `found` must be valid for writes.
 */
enum PtStatus pt_conjectured_value(size_t m,
                                   size_t k,
                                   size_t n,
                                   struct PtConjecture *out,
                                   bool *found);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLANAR_TURAN_H */
