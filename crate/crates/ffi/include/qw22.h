#ifndef QW22_H
#define QW22_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Qw22Profile {
  QW22_PROFILE_STANDARD = 0,
  QW22_PROFILE_GENERALIZED = 1,
} Qw22Profile;

/**
 * Result code of every call. Values 0-3 match the CLI exit codes.
 */
typedef enum Qw22Status {
  QW22_STATUS_OK = 0,
  QW22_STATUS_VERIFICATION_FAILED = 1,
  QW22_STATUS_INVALID_ARGUMENT = 2,
  QW22_STATUS_ARITHMETIC_BOUND = 3,
  QW22_STATUS_PARSE_ERROR = 4,
  QW22_STATUS_UNSUPPORTED_PROFILE = 5,
  QW22_STATUS_UNSUPPORTED_INVERSE = 6,
  QW22_STATUS_NULL_POINTER = 7,
  QW22_STATUS_INVALID_UTF8 = 8,
  QW22_STATUS_PANIC = 9,
} Qw22Status;

/**
 * An element of the algebra together with its deformation profile.
 */
typedef struct Qw22Element Qw22Element;

/**
 * An element of the tensor square (standard profile).
 */
typedef struct Qw22Tensor Qw22Tensor;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an expression and stores its normal form in `*out`.
 *
 * # Safety
 * `expr` must be a nul-terminated string; `out` must be writable.
 */
enum Qw22Status qw22_parse(const char *expr, enum Qw22Profile profile, struct Qw22Element **out);

/**
 * Normal form of the product `x * y`; both operands must share a profile.
 *
 * # Safety
 * `x` and `y` must be live element handles; `out` must be writable.
 */
enum Qw22Status qw22_multiply(const struct Qw22Element *x,
                              const struct Qw22Element *y,
                              struct Qw22Element **out);

/**
 * # Safety
 * `x` must be a live element handle; `out` must be writable.
 */
enum Qw22Status qw22_coproduct(const struct Qw22Element *x, struct Qw22Tensor **out);

/**
 * # Safety
 * `x` must be a live element handle; `out` must be writable.
 */
enum Qw22Status qw22_antipode(const struct Qw22Element *x, struct Qw22Element **out);

/**
 * Counit of `x`, written as a Laurent polynomial (text, or JSON when `json` is set).
 *
 * # Safety
 * `x` must be a live element handle; `out` must be writable.
 */
enum Qw22Status qw22_counit(const struct Qw22Element *x, bool json, char **out);

/**
 * # Safety
 * `x` must be a live element handle; `out` must be writable.
 */
enum Qw22Status qw22_element_to_string(const struct Qw22Element *x, bool json, char **out);

/**
 * # Safety
 * `t` must be a live tensor handle; `out` must be writable.
 */
enum Qw22Status qw22_tensor_to_string(const struct Qw22Tensor *t, bool json, char **out);

/**
 * Stores true in `*equal` when both handles hold the same element and profile.
 *
 * # Safety
 * `x` and `y` must be live element handles; `equal` must be writable.
 */
enum Qw22Status qw22_element_equal(const struct Qw22Element *x,
                                   const struct Qw22Element *y,
                                   bool *equal);

/**
 * Runs a named verification suite and stores the JSON report array in
 * `*report`. Returns `QW22_STATUS_VERIFICATION_FAILED` when any case fails;
 * the report is written in that case too.
 *
 * # Safety
 * `suite` must be a nul-terminated string; `report` must be writable.
 */
enum Qw22Status qw22_check(const char *suite,
                           int64_t max_index,
                           size_t max_len,
                           int64_t k_min,
                           int64_t k_max,
                           size_t cases,
                           uint64_t seed,
                           char **report);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call on the same thread.
 */
const char *qw22_last_error(void);

/**
 * # Safety
 * `x` must be null or a handle not yet freed.
 */
void qw22_element_free(struct Qw22Element *x);

/**
 * # Safety
 * `t` must be null or a handle not yet freed.
 */
void qw22_tensor_free(struct Qw22Tensor *t);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void qw22_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* QW22_H */
