/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef DELTANU_H
#define DELTANU_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  /**
   * Fast path from N0 on, naive below.
   */
  DELTANU_METHOD_AUTO = 0,
  DELTANU_METHOD_NAIVE = 1,
  /**
   * Same routing as `Auto`, but fails without a fast path.
   */
  DELTANU_METHOD_FAST = 2,
  /**
   * Both routes; `Mismatch` if they disagree.
   */
  DELTANU_METHOD_CHECK = 3,
} DeltanuMethod;

typedef enum {
  DELTANU_STATUS_OK = 0,
  DELTANU_STATUS_NULL_POINTER = 1,
  DELTANU_STATUS_INVALID_GENERATORS = 2,
  DELTANU_STATUS_EMBEDDING_DIMENSION_TOO_SMALL = 3,
  DELTANU_STATUS_BUFFER_TOO_SMALL = 4,
  DELTANU_STATUS_WINDOW_TOO_SMALL = 5,
  DELTANU_STATUS_NO_PERIOD = 6,
  DELTANU_STATUS_MISMATCH = 7,
  DELTANU_STATUS_NEGATIVE_WINDOW = 8,
  DELTANU_STATUS_OVERFLOW = 9,
  DELTANU_STATUS_INTERNAL = 10,
  DELTANU_STATUS_PANIC = 11,
} DeltanuStatus;

typedef struct DeltanuSemigroup DeltanuSemigroup;

/**
 * Integer part of the bound profile. `low_width` is the ceiling of lambda1,
 * `high_width` the floor of lambda2.
 */
typedef struct {
  uint64_t d;
  uint64_t ns;
  uint64_t n0;
  uint64_t low_width;
  uint64_t high_width;
  uint64_t delta;
} DeltanuBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a semigroup from `len` generators. The list is reduced to its
 * minimal generating system.
 *
 * # Safety
 * `generators` must point to `len` readable values and `out` must be valid
 * for writes.
 */
DeltanuStatus deltanu_semigroup_new(const uint64_t *generators, size_t len, DeltanuSemigroup **out);

/**
 * # Safety
 * `h` must be null or a handle from `deltanu_semigroup_new` not yet freed.
 */
void deltanu_semigroup_free(DeltanuSemigroup *h);

/**
 * Minimal generators. `*len` always receives their number.
 *
 * # Safety
 * `h` must be a live handle; `buf` must hold `cap` values.
 */
DeltanuStatus deltanu_semigroup_generators(const DeltanuSemigroup *h,
                                           uint64_t *buf,
                                           size_t cap,
                                           size_t *len);

/**
 * # Safety
 * `h` must be a live handle; `frobenius` and `genus` must be valid for writes.
 */
DeltanuStatus deltanu_semigroup_invariants(const DeltanuSemigroup *h,
                                           int64_t *frobenius,
                                           uint64_t *genus);

/**
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
DeltanuStatus deltanu_bounds(const DeltanuSemigroup *h, DeltanuBounds *out);

/**
 * `delta_nu(n)` into `buf`. `*len` always receives the set size; when it
 * exceeds `cap` the call fails with `BUFFER_TOO_SMALL`. `evaluated` may be
 * null; otherwise it receives the number of elements whose length sets were
 * visited.
 *
 * # Safety
 * `h` must be a live handle; `buf` must hold `cap` values; `len` must be
 * valid for writes.
 */
DeltanuStatus deltanu_delta_nu(const DeltanuSemigroup *h,
                               uint64_t n,
                               DeltanuMethod method,
                               uint64_t *buf,
                               size_t cap,
                               size_t *len,
                               uint64_t *evaluated);

/**
 * Number of elements of `W(n)`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
DeltanuStatus deltanu_w_set_count(const DeltanuSemigroup *h, uint64_t n, uint64_t *out);

/**
 * Period report over `0..=n_max` as a JSON object. `jobs` = 0 uses every
 * core. Release `*json` with `deltanu_string_free`.
 *
 * # Safety
 * `h` must be a live handle; `json` must be valid for writes.
 */
DeltanuStatus deltanu_period_report_json(const DeltanuSemigroup *h,
                                         uint64_t n_max,
                                         size_t jobs,
                                         char **json);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void deltanu_string_free(char *s);

/**
 * Message for the last failed call on this thread, empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *deltanu_last_error(void);

/**
 * Static name of a status code.
 */
const char *deltanu_status_name(DeltanuStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DELTANU_H */
