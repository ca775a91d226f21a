#ifndef HORADAM_H
#define HORADAM_H

/* Generated by cbindgen from crates/ffi/src. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum HoradamStatus {
  HORADAM_STATUS_OK = 0,
  HORADAM_STATUS_NULL_POINTER = 1,
  HORADAM_STATUS_INVALID_PARAMS = 2,
  HORADAM_STATUS_PARSE = 3,
  HORADAM_STATUS_INVALID_UTF8 = 4,
  HORADAM_STATUS_NON_DEGENERATE = 5,
  HORADAM_STATUS_JSON = 6,
  HORADAM_STATUS_INTERNAL = 7,
} HoradamStatus;

typedef enum HoradamDegeneracy {
  HORADAM_DEGENERACY_NON_DEGENERATE = 0,
  HORADAM_DEGENERACY_DEGENERATE_J1 = 1,
  HORADAM_DEGENERACY_DEGENERATE_J2 = 2,
} HoradamDegeneracy;

typedef enum HoradamFormat {
  HORADAM_FORMAT_LATEX = 0,
  HORADAM_FORMAT_TEXT = 1,
  HORADAM_FORMAT_JSON = 2,
} HoradamFormat;

/**
 * Opaque sequence parameters `(a, b, c0, c1)`.
 */
typedef struct HoradamParams HoradamParams;

/**
 * Opaque closed-form triple `(F, G, H)` with its weight and parameters.
 */
typedef struct HoradamTriple HoradamTriple;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread, or null. Valid until the next failing
 * call on the same thread; do not free.
 */
const char *horadam_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void horadam_string_free(char *s);

/**
 * Validates and stores `(a, b, c0, c1)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum HoradamStatus horadam_params_new(int64_t a,
                                      int64_t b,
                                      int64_t c0,
                                      int64_t c1,
                                      struct HoradamParams **out);

/**
 * # Safety
 * `p` must come from [`horadam_params_new`] and not be freed twice.
 */
void horadam_params_free(struct HoradamParams *p);

/**
 * Degeneracy class. When degenerate and `ratio_root_out` is non-null, it
 * receives the geometric ratio as a `"num/den"` string to be released with
 * [`horadam_string_free`]; otherwise it is set to null.
 *
 * # Safety
 * Pointers must be valid; `ratio_root_out` may be null.
 */
enum HoradamStatus horadam_params_classify(const struct HoradamParams *p,
                                           enum HoradamDegeneracy *kind_out,
                                           char **ratio_root_out);

/**
 * Canonical triple for the weight polynomial `poly` (a string in `k`, such
 * as `"k^2 + 3k - 1/2"`).
 *
 * # Safety
 * Pointers must be valid and `poly` NUL-terminated.
 */
enum HoradamStatus horadam_triple_general(const struct HoradamParams *p,
                                          const char *poly,
                                          struct HoradamTriple **out);

/**
 * Triple for the weight `k^d`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum HoradamStatus horadam_triple_monomial(const struct HoradamParams *p,
                                           uint32_t d,
                                           struct HoradamTriple **out);

/**
 * Family member with `F = free_poly` for a degenerate sequence.
 * Returns [`HoradamStatus::NonDegenerate`] when no family exists.
 *
 * # Safety
 * Pointers must be valid and strings NUL-terminated.
 */
enum HoradamStatus horadam_triple_family(const struct HoradamParams *p,
                                         const char *poly,
                                         const char *free_poly,
                                         struct HoradamTriple **out);

/**
 * Reads a triple from its JSON form.
 *
 * # Safety
 * Pointers must be valid and `json` NUL-terminated.
 */
enum HoradamStatus horadam_triple_from_json(const char *json, struct HoradamTriple **out);

/**
 * # Safety
 * `t` must come from this library and not be freed twice.
 */
void horadam_triple_free(struct HoradamTriple *t);

/**
 * Renders the identity. The string must be released with
 * [`horadam_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum HoradamStatus horadam_triple_render(const struct HoradamTriple *t,
                                         enum HoradamFormat format,
                                         char **out);

/**
 * Checks the identity for `n = 1..=n_max`. `ok_out` receives the verdict;
 * `first_failure_out`, when non-null, receives the first failing `n` or 0.
 *
 * # Safety
 * Pointers must be valid; `first_failure_out` may be null.
 */
enum HoradamStatus horadam_triple_verify(const struct HoradamTriple *t,
                                         size_t n_max,
                                         bool *ok_out,
                                         size_t *first_failure_out);

/**
 * Verification report as JSON, released with [`horadam_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum HoradamStatus horadam_triple_verify_json(const struct HoradamTriple *t,
                                              size_t n_max,
                                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HORADAM_H */
