/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef ORDERPOLY_H
#define ORDERPOLY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum OrderpolyStatus {
  ORDERPOLY_STATUS_OK = 0,
  ORDERPOLY_STATUS_NULL_ARGUMENT = 1,
  ORDERPOLY_STATUS_INVALID_UTF8 = 2,
  ORDERPOLY_STATUS_MALFORMED_SHAPE = 3,
  ORDERPOLY_STATUS_UNKNOWN_POSET = 4,
  ORDERPOLY_STATUS_INVALID_INPUT = 5,
  ORDERPOLY_STATUS_CAP_EXCEEDED = 6,
  ORDERPOLY_STATUS_ENGINE_MISMATCH = 7,
  ORDERPOLY_STATUS_OUT_OF_RANGE = 8,
  ORDERPOLY_STATUS_INTERNAL = 9,
  ORDERPOLY_STATUS_PANIC = 10,
} OrderpolyStatus;

/**
 * Engine selection; `Default` picks the natural engine for the input.
 */
typedef enum OrderpolyEngine {
  ORDERPOLY_ENGINE_DEFAULT = 0,
  ORDERPOLY_ENGINE_BRUTEFORCE = 1,
  ORDERPOLY_ENGINE_KREWERAS = 2,
  ORDERPOLY_ENGINE_GK = 3,
  ORDERPOLY_ENGINE_MACDONALD = 4,
  ORDERPOLY_ENGINE_RECURSION = 5,
} OrderpolyEngine;

/**
 * Output syntax for [`orderpoly_polynomial_format`].
 */
typedef enum OrderpolyFormat {
  ORDERPOLY_FORMAT_PLAIN = 0,
  ORDERPOLY_FORMAT_LATEX = 1,
  ORDERPOLY_FORMAT_JSON = 2,
} OrderpolyFormat;

/**
 * Exact rational polynomial. Opaque to C.
 */
typedef struct OrderpolyPolynomial OrderpolyPolynomial;

/**
 * Root statistics filled by [`orderpoly_polynomial_analyze`].
 */
typedef struct OrderpolyAnalysis {
  bool nonnegative_coeffs;
  bool log_concave;
  bool unimodal;
  bool real_rooted;
} OrderpolyAnalysis;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Order polynomial of a skew (`"6533/21"`), cylindric (`"442/2/2"`) or
 * shifted (`"shifted:42/1"`) shape.
 *
 * # Safety
 * `shape` must be a NUL-terminated string and `out` a valid pointer.
 */
enum OrderpolyStatus orderpoly_omega_shape(const char *shape,
                                           enum OrderpolyEngine engine,
                                           struct OrderpolyPolynomial **out);

/**
 * Order polynomial of a named poset such as `"zigzag:6"` or `"fig-2covers"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum OrderpolyStatus orderpoly_omega_named(const char *name,
                                           enum OrderpolyEngine engine,
                                           struct OrderpolyPolynomial **out);

/**
 * `Ω(P_{λ/μ}; t)` for a skew shape as a decimal string. This counts plane
 * partitions with entries below `t`.
 *
 * # Safety
 * `shape` must be a NUL-terminated string and `out` a valid pointer.
 */
enum OrderpolyStatus orderpoly_kreweras_value(const char *shape, uint64_t t, char **out);

/**
 * Degree, or -1 for the zero polynomial and for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
int64_t orderpoly_polynomial_degree(const struct OrderpolyPolynomial *p);

/**
 * Coefficient of `t^k` as `"num/den"` or `"num"`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum OrderpolyStatus orderpoly_polynomial_coeff(const struct OrderpolyPolynomial *p,
                                                size_t k,
                                                char **out);

/**
 * Value at an integer point as `"num/den"` or `"num"`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum OrderpolyStatus orderpoly_polynomial_eval(const struct OrderpolyPolynomial *p,
                                               int64_t t,
                                               char **out);

/**
 * Renders the polynomial; with `normalize`, multiplied by `|P|!` first.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum OrderpolyStatus orderpoly_polynomial_format(const struct OrderpolyPolynomial *p,
                                                 enum OrderpolyFormat format,
                                                 bool normalize,
                                                 char **out);

/**
 * Parses the JSON polynomial form `{"coeffs":[["num","den"],...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum OrderpolyStatus orderpoly_polynomial_from_json(const char *json,
                                                    struct OrderpolyPolynomial **out);

/**
 * Exact coefficient and root statistics.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum OrderpolyStatus orderpoly_polynomial_analyze(const struct OrderpolyPolynomial *p,
                                                  struct OrderpolyAnalysis *out);

/**
 * Releases a polynomial handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void orderpoly_polynomial_free(struct OrderpolyPolynomial *p);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void orderpoly_string_free(char *s);

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *orderpoly_last_error(void);

/**
 * Library version, statically allocated.
 */
const char *orderpoly_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORDERPOLY_H */
