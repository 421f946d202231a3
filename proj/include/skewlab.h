/* skewlab: exact arithmetic in skew polynomial rings K[t;sigma,delta] and
 * the nonassociative quotient algebras S_f, plus irreducibility criteria
 * and a brute-force factorization oracle.
 *
 * Handles are opaque; every query takes and returns NUL-terminated strings
 * (polynomial text forms in, JSON out).  Returned strings are owned by the
 * caller and must be released with skl_free().  On SKL_ERR/SKL_REFUSED the
 * output pointers are left untouched and skl_last_error() carries a
 * thread-local message.
 *
 * Status codes mirror the CLI exit codes: 0 success, 2 a mathematical
 * hypothesis was not met (the operation refused to answer), 1 anything
 * else (parse errors, domain errors, bad arguments).
 */

#ifndef SKEWLAB_H
#define SKEWLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skl_status {
  SKL_OK = 0,
  SKL_ERR = 1,
  SKL_REFUSED = 2
} skl_status;

typedef struct skl_ctx skl_ctx;

/* ABI version of this header/library pair. */
int skl_abi_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* skl_last_error(void);

/* field: "p^h", "p^h/mod=[c0,...]" or "funcfield:p"
 * sigma: finite field: Frobenius power ("1", "r=2", "id"; NULL = default)
 *        function field: "frob" or "id" (NULL = "frob")
 * delta: "zero", "inner:ELEM" (finite field), "ddy" (function field);
 *        NULL = "zero"
 */
skl_status skl_ctx_new(const char* field, const char* sigma, const char* delta, skl_ctx** out);
void skl_ctx_free(skl_ctx* ctx);

/* Worker threads for sweep-style queries (census); default 1. */
skl_status skl_set_jobs(skl_ctx* ctx, int jobs);

/* Normalization warnings issued when the context was created, one per
 * line; empty string when none. */
skl_status skl_warnings(skl_ctx* ctx, char** out);

void skl_free(char* s);

/* Ring arithmetic; results are polynomial text forms. */
skl_status skl_mul(skl_ctx* ctx, const char* g, const char* h, char** out);
skl_status skl_divmod(skl_ctx* ctx, const char* g, const char* f, const char* side,
                      char** quotient, char** remainder);
skl_status skl_gcrd(skl_ctx* ctx, const char* g, const char* h, char** out);
skl_status skl_lclm(skl_ctx* ctx, const char* g, const char* h, char** out);

/* Structure queries; results are JSON documents with "schema": 1. */
skl_status skl_irreducible(skl_ctx* ctx, const char* f, char** json);
skl_status skl_census(skl_ctx* ctx, int m, char** json);
skl_status skl_algebra_info(skl_ctx* ctx, const char* f, char** json);
skl_status skl_nucleus(skl_ctx* ctx, const char* f, const char* which, char** json);
/* subring: NULL for plain semi-invariance, or "fix:J" / "e1;e2;..." for
 * the B-weak variant. */
skl_status skl_semi_invariant(skl_ctx* ctx, const char* f, const char* subring, char** json);
skl_status skl_find_semi_invariant(skl_ctx* ctx, int degree, char** json);
skl_status skl_factor(skl_ctx* ctx, const char* f, char** json);
skl_status skl_oracle_factor(skl_ctx* ctx, const char* f, char** json);
skl_status skl_certify(skl_ctx* ctx, const char* family, int m, const char* a, char** json);

#ifdef __cplusplus
}
#endif

#endif /* SKEWLAB_H */
