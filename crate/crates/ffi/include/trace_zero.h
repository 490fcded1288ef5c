#ifndef TRACE_ZERO_H
#define TRACE_ZERO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TzStatus {
  TZ_STATUS_OK = 0,
  TZ_STATUS_NULL_POINTER = 1,
  TZ_STATUS_INVALID_UTF8 = 2,
  TZ_STATUS_INVALID_PARAMS = 3,
  TZ_STATUS_INVALID_INPUT = 4,
  TZ_STATUS_NOT_ON_CURVE = 5,
  TZ_STATUS_NOT_TRACE_ZERO = 6,
  TZ_STATUS_IDENTITY = 7,
  TZ_STATUS_DEGENERATE = 8,
  TZ_STATUS_BUFFER_TOO_SMALL = 9,
  TZ_STATUS_INTERNAL = 10,
  TZ_STATUS_PANIC = 11,
} TzStatus;

typedef enum TzVariant {
  TZ_VARIANT_S = 0,
  TZ_VARIANT_T = 1,
} TzVariant;

// Opaque handle holding validated parameters and precomputed equations.
typedef struct TzContext TzContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next call into the library from the same thread.
const char *tz_last_error(void);

// Parses and validates a JSON parameter file and builds a context.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum TzStatus tz_context_new(const char *json, struct TzContext **out);

// # Safety
// `ctx` must come from [`tz_context_new`] and not be used afterwards. NULL is ignored.
void tz_context_free(struct TzContext *ctx);

// Extension degree n, or 0 for a NULL context.
//
// # Safety
// `ctx` must be NULL or a live context.
size_t tz_context_degree(const struct TzContext *ctx);

// Length in bytes of the binary encoding of a compressed point.
//
// # Safety
// `ctx` must be NULL or a live context.
size_t tz_compressed_len(const struct TzContext *ctx);

// A pseudo-random point of T_n in text form, drawn from `seed`.
//
// # Safety
// `ctx` must be a live context and `out` a valid pointer.
enum TzStatus tz_random_point(const struct TzContext *ctx, uint64_t seed, char **out);

// Compresses a point given as `([x0, …], [y0, …])` into `buf`, writing the
// number of bytes used to `written`. With a short buffer the call fails with
// `BUFFER_TOO_SMALL` and `written` holds the required size.
//
// # Safety
// `point` must be NUL-terminated, `buf` valid for `buf_len` bytes and
// `written` a valid pointer.
enum TzStatus tz_compress(const struct TzContext *ctx,
                          const char *point,
                          enum TzVariant variant,
                          uint8_t *buf,
                          size_t buf_len,
                          size_t *written);

// Decompresses a binary compressed point. On success `out` receives one
// representative per class, one point per line.
//
// # Safety
// `data` must be valid for `len` bytes and `out` a valid pointer.
enum TzStatus tz_decompress(const struct TzContext *ctx,
                            const uint8_t *data,
                            size_t len,
                            char **out);

// # Safety
// `s` must come from this library and not be used afterwards. NULL is ignored.
void tz_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRACE_ZERO_H */
