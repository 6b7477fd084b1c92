#ifndef QPARK_H
#define QPARK_H

/* Generated by cbindgen from the qpark-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum QparkStatus {
  QPARK_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  QPARK_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  QPARK_STATUS_INVALID_UTF8 = 2,
  /**
   * The input text failed to parse or violated a validity invariant.
   */
  QPARK_STATUS_PARSE_ERROR = 3,
  /**
   * A parameter was outside its documented domain.
   */
  QPARK_STATUS_DOMAIN_ERROR = 4,
  /**
   * A verification suite found a counterexample.
   */
  QPARK_STATUS_VERIFY_FAILED = 5,
  /**
   * The suite name is not one of the nine known suites.
   */
  QPARK_STATUS_UNKNOWN_SUITE = 6,
  /**
   * The index is past the end of the polynomial.
   */
  QPARK_STATUS_OUT_OF_RANGE = 7,
} QparkStatus;

/**
 * Computation route for [`qpark_poly`].
 */
typedef enum QparkMethod {
  QPARK_METHOD_ENUMERATE = 0,
  QPARK_METHOD_FORMULA = 1,
  QPARK_METHOD_RECURSION = 2,
  QPARK_METHOD_QT_BRIDGE = 3,
} QparkMethod;

/**
 * Opaque handle to an exact integer polynomial in q.
 */
typedef struct QparkPoly QparkPoly;

/**
 * Statistics of one parking function.
 */
typedef struct QparkStats {
  size_t n;
  size_t area;
  size_t coarea;
  size_t dinv_primary;
  size_t dinv_secondary;
  size_t dinv_total;
} QparkStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `"u1,...,un;v1,...,vn"` and fills `out` with its statistics.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` must point to writable
 * storage for one [`QparkStats`].
 */
enum QparkStatus qpark_stats(const char *text, struct QparkStats *out);

/**
 * Like [`qpark_stats`] but returns the full report as a JSON string,
 * including the diagonal word. Free the string with [`qpark_string_free`].
 *
 * # Safety
 * `text` must be NUL-terminated; `out_json` must be writable.
 */
enum QparkStatus qpark_stats_json(const char *text, char **out_json);

/**
 * Computes the family polynomial in `q^(coarea+dinv)` form. Pass a
 * negative `r` or `s` to sum over that diagonal count. On success the
 * caller owns the handle written to `out` and must release it with
 * [`qpark_poly_free`].
 *
 * # Safety
 * `out` must point to writable storage for one handle.
 */
enum QparkStatus qpark_poly(size_t a,
                            size_t b,
                            int64_t r,
                            int64_t s,
                            enum QparkMethod method,
                            struct QparkPoly **out);

/**
 * Degree of the polynomial, or -1 for the zero polynomial. A NULL handle
 * also reports -1.
 *
 * # Safety
 * `poly` must be NULL or a live handle from [`qpark_poly`].
 */
int64_t qpark_poly_degree(const struct QparkPoly *poly);

/**
 * Writes the coefficient of `q^index` as a decimal string.
 *
 * # Safety
 * `poly` must be a live handle; `out_coeff` must be writable.
 */
enum QparkStatus qpark_poly_coeff(const struct QparkPoly *poly, size_t index, char **out_coeff);

/**
 * Serializes the polynomial as `{"var":"q","coeffs":["c0",...]}`.
 *
 * # Safety
 * `poly` must be a live handle; `out_json` must be writable.
 */
enum QparkStatus qpark_poly_json(const struct QparkPoly *poly, char **out_json);

/**
 * Coefficientwise equality. NULL handles compare equal to nothing.
 *
 * # Safety
 * `x` and `y` must each be NULL or live handles.
 */
bool qpark_poly_eq(const struct QparkPoly *x, const struct QparkPoly *y);

/**
 * Runs one verification suite. Returns `Ok` when every check passes,
 * `VerifyFailed` on a counterexample, `UnknownSuite` for a bad name.
 *
 * # Safety
 * `suite` must be a NUL-terminated string.
 */
enum QparkStatus qpark_verify(const char *suite, size_t max_n);

/**
 * Releases a polynomial handle. NULL is a no-op.
 *
 * # Safety
 * `poly` must have been returned by [`qpark_poly`] and not freed before.
 */
void qpark_poly_free(struct QparkPoly *poly);

/**
 * Releases a string produced by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must have been returned by a qpark function and not freed before.
 */
void qpark_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QPARK_H */
