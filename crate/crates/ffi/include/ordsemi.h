#ifndef ORDSEMI_H
#define ORDSEMI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  OSG_STATUS_OK = 0,
  OSG_STATUS_NULL_ARGUMENT = 1,
  OSG_STATUS_INVALID_UTF8 = 2,
  OSG_STATUS_INVALID_STRUCTURE = 3,
  OSG_STATUS_OUT_OF_RANGE = 4,
  OSG_STATUS_UNKNOWN_NAME = 5,
  OSG_STATUS_SIZE_BOUND = 6,
  OSG_STATUS_INTERNAL = 7,
} OsgStatus;

/**
 * Three-valued answer of a predicate.
 */
typedef enum {
  OSG_TRUTH_FALSE = 0,
  OSG_TRUTH_TRUE = 1,
  /**
   * The predicate presupposes a hypothesis (usually regularity) that fails.
   */
  OSG_TRUTH_NOT_APPLICABLE = 2,
} OsgTruth;

/**
 * An ordered semigroup, owned by the library.
 */
typedef struct OsgSemigroup OsgSemigroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an `osg v1` document into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
OsgStatus osg_parse(const char *text, OsgSemigroup **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `s` must be null or a handle from this library that was not freed yet.
 */
void osg_free(OsgSemigroup *s);

/**
 * Number of elements.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
OsgStatus osg_size(const OsgSemigroup *s, size_t *out);

/**
 * Index of the product `a·b`.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
OsgStatus osg_multiply(const OsgSemigroup *s, size_t a, size_t b, size_t *out);

/**
 * Whether `a <= b`.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
OsgStatus osg_leq(const OsgSemigroup *s, size_t a, size_t b, bool *out);

/**
 * Right inverse test.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
OsgStatus osg_is_right_inverse(const OsgSemigroup *s, OsgTruth *out);

/**
 * Truth of one classification name, e.g. `"right_clifford"`.
 *
 * # Safety
 * `s` must be a live handle, `name` NUL-terminated and `out` a valid pointer.
 */
OsgStatus osg_class(const OsgSemigroup *s, const char *name, OsgTruth *out);

/**
 * Evaluates a predicate expression such as `"regular and not has_zero"`.
 *
 * # Safety
 * `s` must be a live handle, `expr` NUL-terminated and `out` a valid pointer.
 */
OsgStatus osg_eval(const OsgSemigroup *s, const char *expr, bool *out);

/**
 * Classification report as JSON; free the string with [`osg_string_free`].
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
OsgStatus osg_classify_json(const OsgSemigroup *s, char **out);

/**
 * Theorem report as JSON under default readings; free with [`osg_string_free`].
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
OsgStatus osg_theorems_json(const OsgSemigroup *s, char **out);

/**
 * Writes the class label of each element under Green's relation `relation`
 * (one of `L`, `R`, `J`, `H`) into `labels[0..len]`. Labels are the smallest
 * index in each class. `len` must equal the structure size.
 *
 * # Safety
 * `s` must be a live handle, `relation` NUL-terminated, and `labels` valid
 * for `len` writes.
 */
OsgStatus osg_green_classes(const OsgSemigroup *s,
                            const char *relation,
                            size_t *labels,
                            size_t len);

/**
 * Power semigroup of a discretely ordered structure, as a new handle.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
OsgStatus osg_power(const OsgSemigroup *s, OsgSemigroup **out);

/**
 * The structure as an `osg v1` document; free with [`osg_string_free`].
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
OsgStatus osg_to_text(const OsgSemigroup *s, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `p` must be null or a string from this library that was not freed yet.
 */
void osg_string_free(char *p);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *osg_last_error(void);

/**
 * Library version, a static string.
 */
const char *osg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORDSEMI_H */
