#ifndef STRATHOM_H
#define STRATHOM_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a dimension query.
 */
typedef enum StrathomDimensionKind {
  STRATHOM_DIMENSION_KIND_FINITE = 0,
  STRATHOM_DIMENSION_KIND_INFINITE = 1,
  STRATHOM_DIMENSION_KIND_UNKNOWN = 2,
} StrathomDimensionKind;

typedef enum StrathomStatus {
  STRATHOM_STATUS_OK = 0,
  STRATHOM_STATUS_NULL_POINTER = 1,
  STRATHOM_STATUS_INVALID_UTF8 = 2,
  STRATHOM_STATUS_INVALID_INPUT = 3,
  STRATHOM_STATUS_SYNTAX = 4,
  STRATHOM_STATUS_MALFORMED_RELATION = 5,
  STRATHOM_STATUS_NOT_FINITE_DIMENSIONAL = 6,
  STRATHOM_STATUS_INVALID_MODULE = 7,
  STRATHOM_STATUS_COMPUTATION = 8,
  STRATHOM_STATUS_PANIC = 9,
} StrathomStatus;

/**
 * A finite-dimensional algebra.
 */
typedef struct StrathomAlgebra StrathomAlgebra;

/**
 * A right module over a [`StrathomAlgebra`].
 */
typedef struct StrathomModule StrathomModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Valid until the next
 * failing call on the same thread.
 */
const char *strathom_last_error(void);

/**
 * Builds a bundled fixture such as `"FX-43"`. `field` may be null for Q.
 *
 * # Safety
 * `name` and `field` must be null or NUL-terminated strings; `out` must be writable.
 */
enum StrathomStatus strathom_algebra_fixture(const char *name,
                                             const char *field,
                                             struct StrathomAlgebra **out);

/**
 * Builds an algebra from a JSON algebra document. A non-null `field`
 * overrides the document's field.
 *
 * # Safety
 * `json` and `field` must be null or NUL-terminated strings; `out` must be writable.
 */
enum StrathomStatus strathom_algebra_from_json(const char *json,
                                               const char *field,
                                               struct StrathomAlgebra **out);

/**
 * # Safety
 * `a` must be null or a handle from this library that has not been freed.
 */
void strathom_algebra_free(struct StrathomAlgebra *a);

/**
 * # Safety
 * `a` must be a live handle and `dim`, `vertices` writable.
 */
enum StrathomStatus strathom_algebra_dim(const struct StrathomAlgebra *a,
                                         size_t *dim,
                                         size_t *vertices);

/**
 * Global dimension, resolving simples up to `cap` steps. `value` is only
 * meaningful for a finite result.
 *
 * # Safety
 * `a` must be a live handle and `kind`, `value` writable.
 */
enum StrathomStatus strathom_global_dim(const struct StrathomAlgebra *a,
                                        size_t cap,
                                        enum StrathomDimensionKind *kind,
                                        size_t *value);

/**
 * Evaluates a module expression such as `"P2+S2"` or `"P1/P2"`.
 *
 * # Safety
 * `a` must be a live handle, `expr` a NUL-terminated string, `out` writable.
 */
enum StrathomStatus strathom_module_from_expr(const struct StrathomAlgebra *a,
                                              const char *expr,
                                              struct StrathomModule **out);

/**
 * # Safety
 * `m` must be null or a handle from this library that has not been freed.
 */
void strathom_module_free(struct StrathomModule *m);

/**
 * Dimension vector of a module. Writes at most `len` entries and stores the
 * number of vertices in `written`.
 *
 * # Safety
 * `m` must be a live handle, `dims` valid for `len` writes, `written` writable.
 */
enum StrathomStatus strathom_module_dims(const struct StrathomModule *m,
                                         size_t *dims,
                                         size_t len,
                                         size_t *written);

/**
 * # Safety
 * `m` must be a live handle and `kind`, `value` writable.
 */
enum StrathomStatus strathom_proj_dim(const struct StrathomModule *m,
                                      size_t cap,
                                      enum StrathomDimensionKind *kind,
                                      size_t *value);

/**
 * Dimension of `Ext^k(m, n)`; both modules must be over the same algebra.
 *
 * # Safety
 * `m`, `n` must be live handles and `out` writable.
 */
enum StrathomStatus strathom_ext_dim(const struct StrathomModule *m,
                                     const struct StrathomModule *n,
                                     size_t k,
                                     size_t *out);

/**
 * Runs a command line (without the program name) and returns its standard
 * output in `out` and its exit code in `exit_code`. Errors of the command
 * itself are reported through the exit code, with the message in `out`.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; `out`, `exit_code` writable.
 */
enum StrathomStatus strathom_run(size_t argc, const char *const *argv, char **out, int *exit_code);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library that has not been freed.
 */
void strathom_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRATHOM_H */
