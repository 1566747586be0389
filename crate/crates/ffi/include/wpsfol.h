#ifndef WPSFOL_H
#define WPSFOL_H

#pragma once

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WpsfolStatus {
  WPSFOL_STATUS_OK = 0,
  WPSFOL_STATUS_NULL_POINTER = 1,
  WPSFOL_STATUS_INVALID_UTF8 = 2,
  WPSFOL_STATUS_PARSE = 3,
  WPSFOL_STATUS_VALIDATION = 4,
  WPSFOL_STATUS_PRECONDITION = 5,
  WPSFOL_STATUS_INTERNAL = 6,
} WpsfolStatus;

/**
 * Extactic of a field with respect to all sections of one degree.
 */
typedef struct WpsfolExtactic WpsfolExtactic;

/**
 * Validated quasi-homogeneous vector field.
 */
typedef struct WpsfolField WpsfolField;

/**
 * Exact sparse polynomial.
 */
typedef struct WpsfolPolynomial WpsfolPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next call into the library on the same thread.
 */
const char *wpsfol_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void wpsfol_string_free(char *s);

/**
 * Number of monomials of weighted degree `k`.
 *
 * # Safety
 * `weights_ptr` must point to `len` readable values; `result` must be writable.
 */
enum WpsfolStatus wpsfol_h0(const uint32_t *weights_ptr, size_t len, int64_t k, uint64_t *result);

/**
 * # Safety
 * `text_ptr` must be a NUL-terminated string; `result` must be writable.
 */
enum WpsfolStatus wpsfol_polynomial_parse(const char *text_ptr,
                                          size_t nvars,
                                          struct WpsfolPolynomial **result);

/**
 * Canonical text of `p`, or NULL if `p` is NULL.
 *
 * # Safety
 * `p` must be NULL or a live polynomial handle.
 */
char *wpsfol_polynomial_to_string(const struct WpsfolPolynomial *p);

/**
 * Weighted degree of a quasi-homogeneous polynomial; fails with
 * `Validation` otherwise.
 *
 * # Safety
 * `p` must be a live handle, `weights_ptr` must point to `len` values and
 * `result` must be writable.
 */
enum WpsfolStatus wpsfol_polynomial_weighted_degree(const struct WpsfolPolynomial *p,
                                                    const uint32_t *weights_ptr,
                                                    size_t len,
                                                    uint64_t *result);

/**
 * # Safety
 * `p` must be NULL or a handle not yet freed.
 */
void wpsfol_polynomial_free(struct WpsfolPolynomial *p);

/**
 * Builds a field from `len` component strings, one per weight.
 *
 * # Safety
 * `weights_ptr` and `components` must each point to `len` entries; every
 * component must be a NUL-terminated string; `result` must be writable.
 */
enum WpsfolStatus wpsfol_field_new(const uint32_t *weights_ptr,
                                   const char *const *components,
                                   size_t len,
                                   struct WpsfolField **result);

/**
 * # Safety
 * `x` must be a live handle and `result` writable.
 */
enum WpsfolStatus wpsfol_field_degree(const struct WpsfolField *x, uint64_t *result);

/**
 * # Safety
 * `x` must be NULL or a handle not yet freed.
 */
void wpsfol_field_free(struct WpsfolField *x);

/**
 * Tests whether `f` defines an invariant hypersurface. On success
 * `invariant` is set, and when it is true and `cofactor` is non-NULL a new
 * cofactor handle is stored there.
 *
 * # Safety
 * Handles must be live; `invariant` must be writable; `cofactor` may be NULL.
 */
enum WpsfolStatus wpsfol_certify_invariant(const struct WpsfolField *x,
                                           const struct WpsfolPolynomial *f,
                                           bool *invariant,
                                           struct WpsfolPolynomial **cofactor);

/**
 * # Safety
 * `x` must be a live handle and `result` writable.
 */
enum WpsfolStatus wpsfol_extactic_new(const struct WpsfolField *x,
                                      uint64_t k,
                                      struct WpsfolExtactic **result);

/**
 * # Safety
 * `e` must be a live handle and `result` writable.
 */
enum WpsfolStatus wpsfol_extactic_is_zero(const struct WpsfolExtactic *e, bool *result);

/**
 * Predicted weighted degree `C(η,2)(d−1) + ηk`.
 *
 * # Safety
 * `e` must be a live handle and `result` writable.
 */
enum WpsfolStatus wpsfol_extactic_degree(const struct WpsfolExtactic *e, uint64_t *result);

/**
 * # Safety
 * `e` must be NULL or a live handle.
 */
char *wpsfol_extactic_to_string(const struct WpsfolExtactic *e);

/**
 * # Safety
 * `e` must be NULL or a handle not yet freed.
 */
void wpsfol_extactic_free(struct WpsfolExtactic *e);

/**
 * Orbifold Milnor sum of a generic degree-`d` foliation, as "p/q" text
 * stored in `result`.
 *
 * # Safety
 * `weights_ptr` must point to `len` values and `result` must be writable.
 */
enum WpsfolStatus wpsfol_count_ambient(const uint32_t *weights_ptr,
                                       size_t len,
                                       uint64_t d,
                                       char **result);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WPSFOL_H */
