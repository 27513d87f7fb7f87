#ifndef SPARSE_DUALS_H
#define SPARSE_DUALS_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of a fallible call.
 */
typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_ARGUMENT = 2,
  SD_STATUS_GCD_NOT_ONE = 3,
  SD_STATUS_NOT_IN_SEMIGROUP = 4,
  SD_STATUS_NOT_A_LEADER = 5,
  SD_STATUS_FIELD_TOO_LARGE = 6,
  SD_STATUS_NOT_PRIME_POWER = 7,
  SD_STATUS_DUPLICATE_POINTS = 8,
  SD_STATUS_POINT_OUT_OF_RANGE = 9,
  SD_STATUS_SEARCH_SPACE_TOO_LARGE = 10,
  SD_STATUS_TOO_MANY_SUBSETS = 11,
  SD_STATUS_BUFFER_TOO_SMALL = 12,
  SD_STATUS_PANIC = 13,
} SdStatus;

/**
 * Opaque code sequence at a set of curve points.
 */
typedef struct SdCodeSequence SdCodeSequence;

/**
 * Opaque Hermitian curve over `GF(q²)`.
 */
typedef struct SdCurve SdCurve;

/**
 * Opaque inclusion hierarchy of qualifying point sets.
 */
typedef struct SdHierarchy SdHierarchy;

/**
 * Opaque numerical semigroup.
 */
typedef struct SdSemigroup SdSemigroup;

/**
 * The four inclusion conditions between two maximum sparse ideals.
 */
typedef struct SdInclusionReport {
  bool ideal_inclusion;
  bool leader_difference_in_s;
  bool complement_inclusion;
  bool cardinality_difference_in_s;
  bool all_agree;
} SdInclusionReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *sd_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void sd_string_free(char *s);

/**
 * # Safety
 * `generators` must point to `len` values; `out` must be valid for writes.
 */
enum SdStatus sd_semigroup_new(const uint64_t *generators, size_t len, struct SdSemigroup **out);

/**
 * # Safety
 * `s` must be null or a handle from [`sd_semigroup_new`], not yet freed.
 */
void sd_semigroup_free(struct SdSemigroup *s);

/**
 * # Safety
 * `s` must be a live semigroup handle.
 */
uint64_t sd_semigroup_genus(const struct SdSemigroup *s);

/**
 * # Safety
 * `s` must be a live semigroup handle.
 */
uint64_t sd_semigroup_conductor(const struct SdSemigroup *s);

/**
 * Membership; negative `n` is never a member.
 *
 * # Safety
 * `s` must be a live semigroup handle.
 */
bool sd_semigroup_contains(const struct SdSemigroup *s, int64_t n);

/**
 * The `i`-th smallest element.
 *
 * # Safety
 * `s` must be a live semigroup handle.
 */
uint64_t sd_semigroup_lambda(const struct SdSemigroup *s, size_t i);

/**
 * # Safety
 * `s` must be a live handle; `buf`/`out_len` as described in the crate docs.
 */
enum SdStatus sd_semigroup_gaps(const struct SdSemigroup *s,
                                uint64_t *buf,
                                size_t cap,
                                size_t *out_len);

/**
 * Unordered gap pairs summing to `λ_i`.
 *
 * # Safety
 * `s` must be a live semigroup handle.
 */
size_t sd_gap_pair_count(const struct SdSemigroup *s, size_t i);

/**
 * Leaders of maximum sparse ideals up to `bound`.
 *
 * # Safety
 * `s` must be a live handle; `buf`/`out_len` as described in the crate docs.
 */
enum SdStatus sd_leader_set(const struct SdSemigroup *s,
                            uint64_t bound,
                            uint64_t *buf,
                            size_t cap,
                            size_t *out_len);

/**
 * Complement `D(i)` of the maximum sparse ideal led by the value `leader`.
 *
 * # Safety
 * `s` must be a live handle; `buf`/`out_len` as described in the crate docs.
 */
enum SdStatus sd_maximum_sparse_complement(const struct SdSemigroup *s,
                                           uint64_t leader,
                                           uint64_t *buf,
                                           size_t cap,
                                           size_t *out_len);

/**
 * Inclusion conditions between the ideals led by `leader` and `other`.
 *
 * # Safety
 * `s` must be a live handle and `out` valid for writes.
 */
enum SdStatus sd_inclusion_report(const struct SdSemigroup *s,
                                  uint64_t leader,
                                  uint64_t other,
                                  struct SdInclusionReport *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum SdStatus sd_curve_new(uint64_t q, struct SdCurve **out);

/**
 * # Safety
 * `c` must be null or a handle from [`sd_curve_new`], not yet freed.
 */
void sd_curve_free(struct SdCurve *c);

/**
 * # Safety
 * `c` must be a live curve handle.
 */
size_t sd_curve_point_count(const struct SdCurve *c);

/**
 * # Safety
 * `c` must be a live curve handle.
 */
size_t sd_curve_genus(const struct SdCurve *c);

/**
 * Code sequence at the points with the given 1-based indices.
 *
 * # Safety
 * `c` must be a live curve handle, `indices` readable for `len` values and
 * `out` valid for writes.
 */
enum SdStatus sd_code_sequence_new(const struct SdCurve *c,
                                   const size_t *indices,
                                   size_t len,
                                   struct SdCodeSequence **out);

/**
 * # Safety
 * `cs` must be null or a handle from [`sd_code_sequence_new`], not yet freed.
 */
void sd_code_sequence_free(struct SdCodeSequence *cs);

/**
 * `W*`, increasing; always `n` values.
 *
 * # Safety
 * `cs` must be a live handle; `buf`/`out_len` as described in the crate docs.
 */
enum SdStatus sd_code_sequence_wstar(const struct SdCodeSequence *cs,
                                     uint64_t *buf,
                                     size_t cap,
                                     size_t *out_len);

/**
 * `n + 2g − 1 ∈ W*`.
 *
 * # Safety
 * `cs` must be a live code sequence handle.
 */
bool sd_code_sequence_criterion(const struct SdCodeSequence *cs);

/**
 * Exhaustive isometry-vector search. On success `*found` tells whether a
 * vector exists; if so its `n` element encodings are written to `buf`.
 *
 * # Safety
 * `cs` must be a live handle, `found` valid for writes, and
 * `buf`/`out_len` as described in the crate docs.
 */
enum SdStatus sd_code_sequence_isometry_vector(const struct SdCodeSequence *cs,
                                               uint8_t *buf,
                                               size_t cap,
                                               size_t *out_len,
                                               bool *found);

/**
 * Code sequence summary as a JSON string; free with [`sd_string_free`].
 *
 * # Safety
 * `cs` must be a live code sequence handle.
 */
char *sd_code_sequence_json(const struct SdCodeSequence *cs);

/**
 * Exhaustive hierarchy of qualifying point sets with at least `min_size`
 * points.
 *
 * # Safety
 * `c` must be a live curve handle and `out` valid for writes.
 */
enum SdStatus sd_hierarchy_new(const struct SdCurve *c, size_t min_size, struct SdHierarchy **out);

/**
 * # Safety
 * `h` must be null or a handle from [`sd_hierarchy_new`], not yet freed.
 */
void sd_hierarchy_free(struct SdHierarchy *h);

/**
 * # Safety
 * `h` must be a live hierarchy handle.
 */
size_t sd_hierarchy_node_count(const struct SdHierarchy *h);

/**
 * # Safety
 * `h` must be a live hierarchy handle.
 */
size_t sd_hierarchy_edge_count(const struct SdHierarchy *h);

/**
 * Graphviz text; free with [`sd_string_free`].
 *
 * # Safety
 * `h` must be a live hierarchy handle.
 */
char *sd_hierarchy_dot(const struct SdHierarchy *h);

/**
 * `{"nodes":[...],"edges":[...]}`; free with [`sd_string_free`].
 *
 * # Safety
 * `h` must be a live hierarchy handle.
 */
char *sd_hierarchy_json(const struct SdHierarchy *h);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPARSE_DUALS_H */
