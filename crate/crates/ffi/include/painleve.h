#ifndef PAINLEVE_H
#define PAINLEVE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PlvStatus {
  PLV_STATUS_OK = 0,
  PLV_STATUS_NULL_POINTER = 1,
  /**
   * Unparseable rational, invalid UTF-8 or an argument outside the domain.
   */
  PLV_STATUS_INVALID_ARGUMENT = 2,
  PLV_STATUS_UNSUPPORTED = 3,
  PLV_STATUS_INDEX_OUT_OF_RANGE = 4,
  /**
   * Non-convergence, non-generic configuration or insufficient order.
   */
  PLV_STATUS_NUMERICAL_FAILURE = 5,
  /**
   * Independent computations disagreed, or a verification check failed.
   */
  PLV_STATUS_INCONSISTENCY = 6,
  PLV_STATUS_IO = 7,
  PLV_STATUS_PANIC = 8,
} PlvStatus;

typedef enum PlvTauMethod {
  PLV_TAU_METHOD_BILINEAR = 0,
  PLV_TAU_METHOD_QUARTIC = 1,
  PLV_TAU_METHOD_TRIPLE_SUM = 2,
} PlvTauMethod;

typedef enum PlvEllipticCase {
  PLV_ELLIPTIC_CASE_EQUIANHARMONIC = 0,
  PLV_ELLIPTIC_CASE_LEMNISCATIC = 1,
} PlvEllipticCase;

/**
 * Exact parameters `(g2, lambda, g3)`.
 */
typedef struct PlvParams PlvParams;

/**
 * Trusted zeros of a truncated tau-function.
 */
typedef struct PlvPoleSet PlvPoleSet;

/**
 * Exact coefficient table `a_start..=a_order`.
 */
typedef struct PlvTable PlvTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *plv_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void plv_string_free(char *s);

/**
 * Parses three exact rationals (`"3/22"`, `"-0.05"`, `"7"`).
 *
 * # Safety
 * The strings must be NUL-terminated; `out` must be writable.
 */
enum PlvStatus plv_params_new(const char *g2,
                              const char *lambda,
                              const char *g3,
                              struct PlvParams **out);

/**
 * # Safety
 * `p` must be null or a handle from [`plv_params_new`].
 */
void plv_params_free(struct PlvParams *p);

/**
 * Laurent coefficients `c_0..=c_order`.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum PlvStatus plv_laurent_coeffs(const struct PlvParams *params,
                                  size_t order,
                                  struct PlvTable **out);

/**
 * Tau coefficients `C_0..=C_order` by the chosen recursion.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum PlvStatus plv_tau_coeffs(const struct PlvParams *params,
                              size_t order,
                              enum PlvTauMethod method,
                              struct PlvTable **out);

/**
 * `v_1..=v_count` of the pentagonal solution.
 *
 * # Safety
 * `out` must be writable.
 */
enum PlvStatus plv_pentagonal_coeffs(size_t count, struct PlvTable **out);

/**
 * First index held by the table.
 *
 * # Safety
 * `table` must be a live handle.
 */
size_t plv_table_start(const struct PlvTable *table);

/**
 * Number of coefficients held.
 *
 * # Safety
 * `table` must be a live handle.
 */
size_t plv_table_len(const struct PlvTable *table);

/**
 * Coefficient at `index` as an exact `p/q` string.
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum PlvStatus plv_table_get(const struct PlvTable *table, size_t index, char **out);

/**
 * # Safety
 * `table` must be null or a handle from this library.
 */
void plv_table_free(struct PlvTable *table);

/**
 * Zeros of the order-`order` truncated tau-function that persist at a
 * higher order, to `digits` digits.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum PlvStatus plv_trusted_zeros(const struct PlvParams *params,
                                 size_t order,
                                 uint32_t digits,
                                 struct PlvPoleSet **out);

/**
 * # Safety
 * `set` must be a live handle.
 */
size_t plv_pole_set_len(const struct PlvPoleSet *set);

/**
 * Zero `i` rounded to doubles, with its stability (distance to the nearest
 * zero of the comparison truncation).
 *
 * # Safety
 * `set` must be a live handle; the output pointers must be writable.
 */
enum PlvStatus plv_pole_set_get(const struct PlvPoleSet *set,
                                size_t i,
                                double *re,
                                double *im,
                                double *stability);

/**
 * The set as `re,im,stability` CSV with `decimals` places.
 *
 * # Safety
 * `set` must be a live handle; `out` must be writable.
 */
enum PlvStatus plv_pole_set_csv(const struct PlvPoleSet *set, uint32_t decimals, char **out);

/**
 * # Safety
 * `set` must be null or a handle from this library.
 */
void plv_pole_set_free(struct PlvPoleSet *set);

/**
 * The pentagonal constant `gamma` to `digits` decimals (at most 40),
 * confirmed by two independent methods.
 *
 * # Safety
 * `out` must be writable.
 */
enum PlvStatus plv_gamma_constant(uint32_t digits, char **out);

/**
 * Real half-period `omega_1` to `digits` decimals.
 *
 * # Safety
 * `out` must be writable.
 */
enum PlvStatus plv_half_period(enum PlvEllipticCase case_, uint32_t digits, char **out);

/**
 * Runs the exact cross-check suite at order `order`. Returns
 * [`PlvStatus::Inconsistency`] if any check fails.
 *
 * # Safety
 * `params` must be a live handle.
 */
enum PlvStatus plv_verify(const struct PlvParams *params, size_t order);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PAINLEVE_H */
