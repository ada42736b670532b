/* C interface to the zerodiv library. All strings returned through char**
 * are heap-allocated and must be released with zd_string_free. */
#ifndef ZERODIV_ZERODIV_H
#define ZERODIV_ZERODIV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZD_API __declspec(dllexport)
#else
#define ZD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zd_status {
  ZD_OK = 0,
  ZD_ERR_INPUT = 2,            /* malformed text, unknown generator, bad spec */
  ZD_ERR_NOT_ANNIHILATING = 3, /* a*b != 0 */
  ZD_ERR_PRECONDITION = 4,     /* support shape, zero element, fixed point, ... */
  ZD_ERR_INTERNAL = 70
} zd_status;

typedef struct zd_context zd_context;
typedef struct zd_element zd_element;

typedef enum zd_output { ZD_OUTPUT_JSON = 0, ZD_OUTPUT_TEXT = 1 } zd_output;

typedef struct zd_scan_options {
  int n_min;
  int n_max;
  unsigned workers;
  int full_symmetry; /* 0: f fixed to the identity */
  int verbose;       /* include per-structure verdicts */
  const char* alpha1; /* NULL keeps the coefficient from a */
  const char* alpha2;
} zd_scan_options;

ZD_API const char* zd_version(void);
ZD_API void zd_string_free(char* s);

/* Message and 1-based column (0 if none) of the last failure on this thread. */
ZD_API const char* zd_last_error(void);
ZD_API int zd_last_error_column(void);

ZD_API zd_status zd_context_create(const char* group, const char* field, zd_context** out);
ZD_API void zd_context_destroy(zd_context* ctx);
ZD_API zd_status zd_context_describe(const zd_context* ctx, char** out);

ZD_API zd_status zd_element_parse(const zd_context* ctx, const char* text, zd_element** out);
ZD_API void zd_element_destroy(zd_element* x);
ZD_API zd_status zd_element_mul(const zd_element* x, const zd_element* y, zd_element** out);
ZD_API zd_status zd_element_add(const zd_element* x, const zd_element* y, zd_element** out);
ZD_API zd_status zd_element_render(const zd_element* x, char** out);
ZD_API zd_status zd_element_to_json(const zd_element* x, char** out);
ZD_API size_t zd_element_support_size(const zd_element* x);

/* ZD_OK with *is_zero set; precondition errors only for mismatched elements. */
ZD_API zd_status zd_annihilate_check(const zd_element* a, const zd_element* b, int* is_zero, char** json);

/* Cancellation structure of a*b = 0 as JSON. */
ZD_API zd_status zd_recover(const zd_element* a, const zd_element* b, char** json);
/* Structure plus relation words; trace adds the chain walks. */
ZD_API zd_status zd_extract(const zd_element* a, const zd_element* b, int trace, char** json);

/* Valid structures of size n, one JSON object per line. */
ZD_API zd_status zd_enumerate(int n, int full_symmetry, char** jsonl, uint64_t* count);

/* One JSON line per n; *feasible receives the total feasible count. */
ZD_API zd_status zd_scan(const zd_element* a, const zd_scan_options* options, char** jsonl, uint64_t* feasible);

/* *found is 0 or 1; json holds the witness or null. */
ZD_API zd_status zd_search_direct(const zd_element* a, int n_max, int radius, int* found, char** json);

/* a = 1 + h + h^2, b = (1 - h) c for an order-3 element h. */
ZD_API zd_status zd_make_instance(const zd_element* c, zd_element** a, zd_element** b);

/* One JSON line per suite; *all_passed set accordingly. */
ZD_API zd_status zd_selftest(uint64_t seed, unsigned workers, size_t cases, char** jsonl, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
