#ifndef LANDAU_LANDAU_H
#define LANDAU_LANDAU_H

#include <stddef.h>
#include <stdint.h>

#if defined(LANDAU_BUILDING)
#define LANDAU_API __attribute__((visibility("default")))
#else
#define LANDAU_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Same numbering as the library's error codes. */
typedef enum {
    LANDAU_OK = 0,
    LANDAU_E_DOMAIN = 1,
    LANDAU_E_RANGE_EXHAUSTED = 2,
    LANDAU_E_CAPACITY = 3,
    LANDAU_E_RESOURCE = 4,
    LANDAU_E_INTEGRITY = 5,
    LANDAU_E_NUMERICAL = 6,
    LANDAU_E_PRECONDITION = 7,
    LANDAU_E_PARAMETER = 8,
    LANDAU_E_USAGE = 9,
    LANDAU_E_HYPOTHESIS = 10,
    LANDAU_E_IO = 11,
    LANDAU_E_INTERNAL = 99
} landau_status;

typedef struct landau_ctx landau_ctx;
typedef struct landau_enum landau_enum;

/* Message of the last failed call on this thread; never NULL. */
LANDAU_API const char* landau_last_error(void);
LANDAU_API const char* landau_status_name(landau_status s);
LANDAU_API const char* landau_version(void);

/* Strings returned through char** are malloc'ed and released with landau_free. */
LANDAU_API void landau_free(char* s);

/* A context holds the working precision, the cache directory and lazily built tables.
   cache_dir may be NULL (no on-disk cache). precision_bits >= 64. */
LANDAU_API landau_status landau_ctx_new(unsigned precision_bits, const char* cache_dir, landau_ctx** out);
LANDAU_API void landau_ctx_free(landau_ctx* ctx);
/* Exact table limits used by g/h and by verify; 0 keeps the default. */
LANDAU_API landau_status landau_ctx_set_limits(landau_ctx* ctx, uint64_t g_limit, uint64_t h_limit);

/* Integers above 2^64 travel as decimal strings. */

/* g(n) or h(n) as "2^2 * 3" and its value in decimal. */
LANDAU_API landau_status landau_g(landau_ctx* ctx, uint64_t n, char** factored, char** value);
LANDAU_API landau_status landau_h(landau_ctx* ctx, uint64_t n, char** factored, char** value);
LANDAU_API landau_status landau_log_g(landau_ctx* ctx, uint64_t n, double* out);
LANDAU_API landau_status landau_log_h(landau_ctx* ctx, uint64_t n, double* out);

/* li(x) and li^{-1}(y) as decimal strings with `digits` significant digits, computed at the context precision. */
LANDAU_API landau_status landau_li(landau_ctx* ctx, const char* x, unsigned digits, char** out);
LANDAU_API landau_status landau_li_inv(landau_ctx* ctx, const char* y, unsigned digits, char** out);

/* Streaming walk over the superchampion records with ell <= limit_ell (decimal). */
typedef struct {
    char ell[48];
    double log_n;
    uint64_t pmax;
    int type2;
    uint64_t event_p;  /* the record is reached at rho = f_j(p) */
    unsigned event_j;
} landau_record;
LANDAU_API landau_status landau_enum_new(landau_ctx* ctx, const char* limit_ell, landau_enum** out);
/* *done is set to 1 (and rec untouched) once the walk is over. */
LANDAU_API landau_status landau_enum_next(landau_enum* e, landau_record* rec, int* done);
LANDAU_API void landau_enum_free(landau_enum* e);

/* Everything below answers with a JSON document. */

/* rows of the superchampion table: n range, N factored, ell, rho, xi */
LANDAU_API landau_status landau_table_json(landau_ctx* ctx, const char* limit_ell, char** json);
/* type-2 cache up to limit_ell, written to the context cache directory (or `path` if given) */
LANDAU_API landau_status landau_cache_build(landau_ctx* ctx, const char* limit_ell, const char* path, char** json);
/* E, E*, N', s at n */
LANDAU_API landau_status landau_excess(landau_ctx* ctx, const char* n, char** json);
/* a, b, z, d, beta at n; exact tables where they reach, enclosures from bounds elsewhere */
LANDAU_API landau_status landau_sequences(landau_ctx* ctx, const char* n, char** json);

/* Dichotomic verification of a catalog suite over [n1, n2]; NULL bounds mean the suite defaults.
   checkpoint (JSON text) resumes an interrupted run; max_good_calls = 0 means no budget.
   On LANDAU_OK the certificate is returned. On interruption the status is the cause and *json
   holds {"error": ..., "checkpoint": ...}. */
LANDAU_API landau_status landau_verify(landau_ctx* ctx, const char* suite, const char* n1, const char* n2,
                                       const char* checkpoint, uint64_t max_good_calls, char** json);
LANDAU_API landau_status landau_suite_catalog(char** json);
/* per-slice bounds between consecutive records with ell in [ell_from, ell_limit] */
LANDAU_API landau_status landau_slice_scan(landau_ctx* ctx, const char* suite, const char* ell_from,
                                           const char* ell_limit, char** json);
/* theta(p_k) > Phi_{1/8}(sigma_{k+1}) up to p_{k+1} <= pmax */
LANDAU_API landau_status landau_kscan(landau_ctx* ctx, uint64_t pmax, char** json);
/* minimum of z (mode "z") or a (mode "a") over the records up to limit_ell */
LANDAU_API landau_status landau_convex_scan(landau_ctx* ctx, const char* mode, const char* limit_ell, char** json);

/* Evaluate an explicit prime-counting bound family at the given points. witness != 0 allows
   points outside the stated range (flagged in the report). */
LANDAU_API landau_status landau_check_bounds(landau_ctx* ctx, const char* family, const uint64_t* xs, size_t count,
                                             int witness, char** json);
LANDAU_API landau_status landau_bound_families(char** json);

#ifdef __cplusplus
}
#endif

#endif
