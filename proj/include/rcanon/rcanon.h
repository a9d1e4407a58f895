/* rcanon: canonicalization of Riemann curvature tensor polynomials.
 *
 * C interface over the C++ core. All objects are opaque handles; every
 * function that can fail returns an rcanon_status and leaves a message
 * retrievable through rcanon_last_error() (thread-local, valid until the
 * next rcanon call on the same thread).
 */
#ifndef RCANON_H
#define RCANON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcanon_status {
  RCANON_OK = 0,
  RCANON_SYNTAX_ERROR = 1,
  RCANON_VALIDATION_ERROR = 2,
  RCANON_INVALID_ARGUMENT = 3,
  RCANON_INTERNAL_ERROR = 4
} rcanon_status;

typedef enum rcanon_mode {
  RCANON_MODE_PRE = 0,    /* monoterm canonical form */
  RCANON_MODE_NORMAL = 1  /* monoterm + Bianchi canonical form */
} rcanon_mode;

typedef enum rcanon_method {
  RCANON_METHOD_REBE = 0,  /* symbolic-extension elimination */
  RCANON_METHOD_DIRECT = 1 /* direct Bianchi equation system */
} rcanon_method;

typedef enum rcanon_format {
  RCANON_FORMAT_TEXT = 0,
  RCANON_FORMAT_JSON = 1
} rcanon_format;

typedef struct rcanon_poly rcanon_poly;
typedef struct rcanon_options rcanon_options;

typedef struct rcanon_stats {
  uint64_t branch_count;   /* search branches generated (J), all pnom runs */
  uint64_t prune_count;
  uint64_t equation_count; /* Bianchi equations generated */
  uint64_t cache_hits;
  uint64_t elapsed_us;
} rcanon_stats;

const char* rcanon_version(void);
const char* rcanon_last_error(void);

rcanon_options* rcanon_options_new(void);
void rcanon_options_free(rcanon_options* opts);
/* comma-separated free index names, ranked before all unlisted names */
rcanon_status rcanon_options_set_free_order(rcanon_options* opts, const char* names);
rcanon_status rcanon_options_set_method(rcanon_options* opts, rcanon_method method);
rcanon_status rcanon_options_set_cache_path(rcanon_options* opts, const char* path);

/* opts may be NULL for defaults */
rcanon_status rcanon_parse(const char* text, const rcanon_options* opts, rcanon_poly** out);

/* stats may be NULL */
rcanon_status rcanon_canonicalize(const rcanon_poly* poly, rcanon_mode mode,
                                  const rcanon_options* opts, rcanon_poly** out,
                                  rcanon_stats* stats);

rcanon_status rcanon_render(const rcanon_poly* poly, rcanon_format format, char** out);

/* 1 when structurally equal (coefficients, factors, recorded rows), else 0 */
int rcanon_poly_equal(const rcanon_poly* a, const rcanon_poly* b);
int rcanon_poly_is_zero(const rcanon_poly* poly);
size_t rcanon_poly_term_count(const rcanon_poly* poly);

void rcanon_poly_free(rcanon_poly* poly);
void rcanon_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RCANON_H */
