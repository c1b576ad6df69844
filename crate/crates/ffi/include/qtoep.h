#ifndef QTOEP_H
#define QTOEP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

/**
 * Result codes.
 */
typedef enum QtoepStatus {
  QTOEP_STATUS_OK = 0,
  QTOEP_STATUS_NULL_POINTER = 1,
  QTOEP_STATUS_INVALID_ARGUMENT = 2,
  QTOEP_STATUS_UNKNOWN_BUILTIN = 3,
  QTOEP_STATUS_PARSE_ERROR = 4,
  QTOEP_STATUS_NUMERICAL_ERROR = 5,
  QTOEP_STATUS_BUFFER_TOO_SMALL = 6,
  QTOEP_STATUS_PANIC = 7,
} QtoepStatus;

/**
 * Spectral quantity compared by [`qtoep_quantile_distance`].
 */
typedef enum QtoepMode {
  QTOEP_MODE_EIG = 0,
  QTOEP_MODE_SV = 1,
} QtoepMode;

/**
 * A dense quaternion matrix.
 */
typedef struct QtoepMatrix QtoepMatrix;

/**
 * A generating function together with its kernel partition.
 */
typedef struct QtoepSymbol QtoepSymbol;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `cap` bytes) and returns the full message length in bytes.
 *
 * # Safety
 * `buf` must be null or valid for `cap` bytes.
 */
size_t qtoep_last_error_message(char *buf, size_t cap);

/**
 * Looks up a built-in symbol by name.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum QtoepStatus qtoep_symbol_from_builtin(const char *name, struct QtoepSymbol **out);

/**
 * Parses a symbol from its JSON description.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum QtoepStatus qtoep_symbol_from_json(const char *text, struct QtoepSymbol **out);

/**
 * Replaces the kernel partition with the one named by `label`
 * (`L`, `R`, `S12`, `S21` or `S<left>_<right>`, 1-based).
 *
 * # Safety
 * `symbol` must come from this library; `label` must be NUL-terminated.
 */
enum QtoepStatus qtoep_symbol_set_kernel(struct QtoepSymbol *symbol, const char *label);

/**
 * Number of variables and block shape.
 *
 * # Safety
 * All pointers must be valid.
 */
enum QtoepStatus qtoep_symbol_dims(const struct QtoepSymbol *symbol,
                                   size_t *d,
                                   size_t *s,
                                   size_t *t);

/**
 * Writes 1 to `hermitian` when the symbol satisfies the Hermitian criterion, else 0.
 *
 * # Safety
 * All pointers must be valid.
 */
enum QtoepStatus qtoep_symbol_is_hermitian(const struct QtoepSymbol *symbol, int32_t *hermitian);

/**
 * Releases a symbol. Null is ignored.
 *
 * # Safety
 * `symbol` must be null or come from this library and not be used afterwards.
 */
void qtoep_symbol_free(struct QtoepSymbol *symbol);

/**
 * Assembles the block multilevel Toeplitz matrix of size `nvec[0..levels]`.
 *
 * # Safety
 * `symbol` must come from this library, `nvec` must hold `levels` entries.
 */
enum QtoepStatus qtoep_assemble(const struct QtoepSymbol *symbol,
                                const size_t *nvec,
                                size_t levels,
                                struct QtoepMatrix **out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum QtoepStatus qtoep_matrix_dims(const struct QtoepMatrix *matrix, size_t *rows, size_t *cols);

/**
 * Entry `(i, j)` as `[q0, q1, q2, q3]` for `q0 + q1 i + q2 j + q3 k`.
 *
 * # Safety
 * `matrix` must come from this library and `out` hold four doubles.
 */
enum QtoepStatus qtoep_matrix_get(const struct QtoepMatrix *matrix,
                                  size_t i,
                                  size_t j,
                                  double *out);

/**
 * Singular values in nonincreasing order. `len` receives the count
 * `min(rows, cols)`; with a short buffer nothing is written except `len`.
 *
 * # Safety
 * `buf` must be valid for `cap` doubles (or null with `cap = 0`).
 */
enum QtoepStatus qtoep_matrix_singular_values(const struct QtoepMatrix *matrix,
                                              double *buf,
                                              size_t cap,
                                              size_t *len);

/**
 * Canonical eigenvalues of a square matrix as interleaved `(re, im)` pairs
 * with `im >= 0`. `len` receives the number of eigenvalues; `cap` counts doubles.
 *
 * # Safety
 * `buf` must be valid for `cap` doubles (or null with `cap = 0`).
 */
enum QtoepStatus qtoep_matrix_canonical_eigenvalues(const struct QtoepMatrix *matrix,
                                                    double *buf,
                                                    size_t cap,
                                                    size_t *len);

/**
 * # Safety
 * `matrix` must be null or come from this library and not be used afterwards.
 */
void qtoep_matrix_free(struct QtoepMatrix *matrix);

/**
 * Mean absolute difference between the sorted spectrum of the Toeplitz
 * matrix of size `nvec` and the symbol quantiles, using the symbol's own
 * kernel and the default sampling grid.
 *
 * # Safety
 * `symbol` must come from this library, `nvec` hold `levels` entries.
 */
enum QtoepStatus qtoep_quantile_distance(const struct QtoepSymbol *symbol,
                                         const size_t *nvec,
                                         size_t levels,
                                         enum QtoepMode mode,
                                         double *out);

/**
 * Runs the invariant suites; `passed` receives 1 when every suite passes.
 * `failed_suites`, if non-null, receives the number of failing suites.
 *
 * # Safety
 * Pointers must be valid or null where allowed.
 */
enum QtoepStatus qtoep_selftest(uint64_t seed, int32_t *passed, size_t *failed_suites);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QTOEP_H */
