#ifndef CABLEOPS_H
#define CABLEOPS_H

/* C interface to the cable operator library.
 *
 * The library builds the quantum operator attached to a (p, q)-cable space
 * at an odd level r >= 3, in exact cyclotomic arithmetic, and exposes its
 * structural verification, determinant, inverse, and norm-growth probes.
 *
 * Conventions:
 *   - q >= 1, gcd(p, q) = 1, r odd >= 3; m = (r - 1) / 2 is the matrix size.
 *   - the root of unity zeta has order 4r and is evaluated as exp(i*pi/(2r)).
 *   - all payload functions return heap strings owned by the caller; release
 *     them with cableops_string_free.
 *   - on any failure the return value names the error class and
 *     cableops_last_error() holds a human-readable message for the calling
 *     thread.
 */

#include <stddef.h>

#if defined(_WIN32)
#define CABLEOPS_API __declspec(dllexport)
#else
#define CABLEOPS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cableops_status {
    CABLEOPS_OK = 0,
    /* arguments violate the documented domain (bad p, q, r, color, range) */
    CABLEOPS_EINVAL = 1,
    /* the operation's precondition fails for these parameters */
    CABLEOPS_EPRECOND = 2,
    /* an internal structural identity failed; always a bug */
    CABLEOPS_EINTERNAL = 3,
    /* an iterative routine did not converge */
    CABLEOPS_ENOCONV = 4,
    CABLEOPS_ENOMEM = 5
} cableops_status;

typedef struct cableops_ctx cableops_ctx;

CABLEOPS_API const char* cableops_version(void);

/* message for the most recent failing call on this thread; never NULL */
CABLEOPS_API const char* cableops_last_error(void);

/* Build the operator context for one (p, q, r) triple. The construction
 * assembles the operator matrix two independent ways and verifies they
 * agree exactly; CABLEOPS_EINTERNAL reports a mismatch. */
CABLEOPS_API cableops_status cableops_ctx_create(long p, long q, long r,
                                                 cableops_ctx** out_ctx);
CABLEOPS_API void cableops_ctx_destroy(cableops_ctx* ctx);

CABLEOPS_API long cableops_ctx_m(const cableops_ctx* ctx);
CABLEOPS_API long cableops_ctx_gcd_rq(const cableops_ctx* ctx);

/* |det| of the evaluated twist matrix */
CABLEOPS_API cableops_status cableops_det_modulus(cableops_ctx* ctx, double* out);

/* largest singular value of the evaluated operator */
CABLEOPS_API cableops_status cableops_operator_norm(cableops_ctx* ctx, double* out);

/* largest singular value of the inverse; requires gcd(r, q) = 1 */
CABLEOPS_API cableops_status cableops_inverse_norm(cableops_ctx* ctx, double* out);

/* max-abs entry of RT * X - I for the factored inverse X;
 * requires gcd(r, q) = 1 */
CABLEOPS_API cableops_status cableops_inverse_residual(cableops_ctx* ctx, double* out);

/* squared norm of the image of e_1 (the solid-torus invariant; equals 1) */
CABLEOPS_API cableops_status cableops_tv_solid_torus(cableops_ctx* ctx, double* out);

/* squared norm of the image of e_color, 1 <= color <= m */
CABLEOPS_API cableops_status cableops_tv_colored(cableops_ctx* ctx, long color, double* out);

/* ---- payload builders; *out receives a NUL-terminated heap string ---- */

CABLEOPS_API cableops_status cableops_matrix_json(cableops_ctx* ctx, char** out);
CABLEOPS_API cableops_status cableops_verify_json(cableops_ctx* ctx, char** out);
/* requires r > q + 6 when gcd(r, q) = 1 */
CABLEOPS_API cableops_status cableops_det_json(cableops_ctx* ctx, char** out);

CABLEOPS_API cableops_status cableops_sweep_norm_json(long p, long q, long r_min,
                                                      long r_max, char** out);
CABLEOPS_API cableops_status cableops_sweep_norm_csv(long p, long q, long r_min,
                                                     long r_max, char** out);
CABLEOPS_API cableops_status cableops_sweep_tv_json(long p, long q, long r_min, long r_max,
                                                    long color, char** out);
CABLEOPS_API cableops_status cableops_sweep_tv_csv(long p, long q, long r_min, long r_max,
                                                   long color, char** out);
/* two-column "r value" text for plotting */
CABLEOPS_API cableops_status cableops_gnuplot_norm(long p, long q, long r_min, long r_max,
                                                   char** out);
CABLEOPS_API cableops_status cableops_gnuplot_tv(long p, long q, long r_min, long r_max,
                                                 long color, char** out);
CABLEOPS_API cableops_status cableops_sandwich_json(long p, long q, long r_min, long r_max,
                                                    unsigned long long seed, long n_random,
                                                    char** out);
CABLEOPS_API cableops_status cableops_explore_small_r_json(long p, long q, char** out);

CABLEOPS_API void cableops_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CABLEOPS_H */
