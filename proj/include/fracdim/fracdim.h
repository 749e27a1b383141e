#ifndef FRACDIM_H
#define FRACDIM_H

/* C interface to the fracdim library: sampled surfaces on uniform
 * rectangular grids, mixed Riemann-Liouville fractional integrals,
 * box-counting dimension and Holder-exponent estimators, and grid
 * variation measures.
 *
 * All functions returning fracdim_status set a thread-local error message
 * retrievable via fracdim_last_error() on failure. Output parameters are
 * written only on FRACDIM_OK. Surfaces are immutable once created; sharing
 * one across threads for reads is safe.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fracdim_surface fracdim_surface;

typedef enum fracdim_status {
    FRACDIM_OK = 0,
    FRACDIM_ERR_INVALID_ARGUMENT = 1, /* bad parameter or precondition */
    FRACDIM_ERR_DOMAIN = 2,           /* numeric-domain violation, e.g. gamma <= 0 */
    FRACDIM_ERR_FORMAT = 3,           /* malformed surface CSV */
    FRACDIM_ERR_GUARD = 4,            /* resource guard tripped (grid too large/coarse) */
    FRACDIM_ERR_IO = 5,               /* file open/write failure */
    FRACDIM_ERR_NUMERIC = 6           /* non-finite values encountered */
} fracdim_status;

/* Message for the most recent failure on the calling thread; never NULL. */
const char* fracdim_last_error(void);

const char* fracdim_version(void);

/* Caps internal parallelism. n <= 0 restores the hardware default. */
void fracdim_set_max_threads(int n);

/* --- surfaces ----------------------------------------------------------- */

/* values: nx*ny doubles, row-major with the x index fastest. Copied. */
fracdim_status fracdim_surface_create(const double* values, int nx, int ny, double a, double b, double c,
                                      double d, fracdim_surface** out);

/* spec grammar: "constant:v", "monomial:p,q", "separable-sine:w1,w2",
 * "weierstrass:lambda,mu,terms", "uv-m". */
fracdim_status fracdim_surface_generate(const char* spec, double a, double b, double c, double d, int nx,
                                        int ny, fracdim_surface** out);

fracdim_status fracdim_surface_read_csv(const char* path, fracdim_surface** out);
fracdim_status fracdim_surface_write_csv(const fracdim_surface* s, const char* path);

void fracdim_surface_destroy(fracdim_surface* s);

int fracdim_surface_nx(const fracdim_surface* s);
int fracdim_surface_ny(const fracdim_surface* s);
/* bounds = {a, b, c, d}. */
void fracdim_surface_domain(const fracdim_surface* s, double bounds[4]);
fracdim_status fracdim_surface_value(const fracdim_surface* s, int i, int j, double* out);
/* Borrowed pointer to the nx*ny value block; valid until destroy. */
const double* fracdim_surface_values(const fracdim_surface* s);

/* --- fractional integration --------------------------------------------- */

fracdim_status fracdim_mixed_integral(const fracdim_surface* f, double gamma1, double gamma2,
                                      fracdim_surface** out);

/* sup-norm gap between integrating by (g1,g2) then (h1,h2) and integrating
 * once by (g1+h1, g2+h2). */
fracdim_status fracdim_semigroup_defect(const fracdim_surface* f, double gamma1, double gamma2,
                                        double gamma1b, double gamma2b, double* out);

/* 1-D Riemann-Liouville integral of n samples over [a,b]; out: n doubles. */
fracdim_status fracdim_rl_integral_1d(const double* samples, int n, double a, double b, double gamma,
                                      double* out);

/* --- dimension ----------------------------------------------------------- */

fracdim_status fracdim_box_count(const fracdim_surface* s, int k, long long* out);

/* Levels k_min..k_max (k_max >= k_min + 2). If deltas/counts are non-NULL
 * they receive k_max - k_min + 1 entries. */
fracdim_status fracdim_box_dimension(const fracdim_surface* s, int k_min, int k_max, double* deltas,
                                     long long* counts, double* slope, double* intercept, double* r_squared);

/* Lags k_min..k_max (k_max >= k_min + 1). If lags/sups are non-NULL they
 * receive k_max - k_min + 1 entries, smallest lag first. *defined is 0 when
 * every sup-increment is zero; exponent/r_squared are then left untouched. */
fracdim_status fracdim_holder_exponent(const fracdim_surface* s, int k_min, int k_max, double* lags,
                                       double* sups, int* defined, double* exponent, double* r_squared);

/* --- variation ----------------------------------------------------------- */

/* axis: 'x' walks a row (index = y node), 'y' walks a column (index = x
 * node). from/to restrict to a node range along the line; pass 0 and
 * length-1 for the whole line. */
fracdim_status fracdim_line_variation(const fracdim_surface* s, char axis, int index, int from, int to,
                                      double* out);

fracdim_status fracdim_arzela_lower_bound(const fracdim_surface* s, double* out);

fracdim_status fracdim_is_bimonotone(const fracdim_surface* s, int* out);

#ifdef __cplusplus
}
#endif

#endif /* FRACDIM_H */
