#ifndef GQ3_H
#define GQ3_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(GQ3_BUILDING)
#define GQ3_API __declspec(dllexport)
#else
#define GQ3_API __declspec(dllimport)
#endif
#else
#define GQ3_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gq3_status {
  GQ3_OK = 0,
  GQ3_PARAM_MISMATCH,
  GQ3_ZERO_NORM,
  GQ3_NON_ELLIPTIC,
  GQ3_DEGENERATE_AXIS,
  GQ3_NON_UNIT,
  GQ3_NOT_UNIT_VECTOR,
  GQ3_NOT_POSITIVE_FAMILY,
  GQ3_NO_PERIOD,
  GQ3_CONGRUENCE_VIOLATION,
  GQ3_INVALID_ARGUMENT,
  GQ3_INTERNAL
} gq3_status;

typedef struct gq3_params {
  double l1, l2, l3;
} gq3_params;

/* a0 + a1 e1 + a2 e2 + a3 e3 */
typedef struct gq3_quat {
  gq3_params params;
  double c[4];
} gq3_quat;

typedef struct gq3_vec3 {
  gq3_params params;
  double c[3];
} gq3_vec3;

/* row-major */
typedef struct gq3_mat4 {
  double m[16];
} gq3_mat4;

typedef struct gq3_mat3 {
  double m[9];
} gq3_mat3;

typedef struct gq3_complex {
  double re, im;
} gq3_complex;

typedef struct gq3_eigenpair {
  gq3_complex value;
  int has_vector;
  gq3_complex vector[4];
  int multiplicity;
} gq3_eigenpair;

typedef struct gq3_polar {
  double modulus;
  double theta;
  int has_axis; /* 0 for pure scalars */
  gq3_vec3 axis;
} gq3_polar;

typedef struct gq3_power_relation {
  gq3_quat scaled;
  gq3_quat direct;
  int period;
} gq3_power_relation;

/* Holds tolerance overrides and the message of the last failed call.
 * Every function accepts NULL for default tolerances. A context must not
 * be shared between threads. */
typedef struct gq3_context gq3_context;
typedef struct gq3_root_set gq3_root_set;

GQ3_API gq3_context* gq3_context_create(void);
GQ3_API void gq3_context_destroy(gq3_context* ctx);
GQ3_API gq3_status gq3_context_set_tolerance(gq3_context* ctx, double unit,
                                             double period);
/* Empty string when the last call succeeded. */
GQ3_API const char* gq3_last_error(const gq3_context* ctx);
/* Stable identifier such as "ZeroNorm"; "Ok" for GQ3_OK. */
GQ3_API const char* gq3_status_string(gq3_status status);

/* params */
GQ3_API gq3_status gq3_params_make(gq3_context* ctx, double l1, double l2,
                                   double l3, gq3_params* out);
/* hamilton, split, semi, split-semi, quarter or 2param:<lambda>,<mu> */
GQ3_API gq3_status gq3_family(gq3_context* ctx, const char* name,
                              gq3_params* out);

/* core algebra */
GQ3_API gq3_status gq3_add(gq3_context* ctx, const gq3_quat* p,
                           const gq3_quat* q, gq3_quat* out);
GQ3_API gq3_status gq3_sub(gq3_context* ctx, const gq3_quat* p,
                           const gq3_quat* q, gq3_quat* out);
GQ3_API gq3_status gq3_scale(gq3_context* ctx, double c, const gq3_quat* p,
                             gq3_quat* out);
GQ3_API gq3_status gq3_mul(gq3_context* ctx, const gq3_quat* p,
                           const gq3_quat* q, gq3_quat* out);
GQ3_API gq3_status gq3_conj(gq3_context* ctx, const gq3_quat* p,
                            gq3_quat* out);
GQ3_API gq3_status gq3_norm(gq3_context* ctx, const gq3_quat* p, double* out);
GQ3_API gq3_status gq3_inverse(gq3_context* ctx, const gq3_quat* p,
                               gq3_quat* out);
GQ3_API gq3_status gq3_scalar_product(gq3_context* ctx, const gq3_quat* p,
                                      const gq3_quat* q, double* out);
GQ3_API gq3_status gq3_bilinear_f(gq3_context* ctx, const gq3_vec3* u,
                                  const gq3_vec3* v, double* out);
GQ3_API gq3_status gq3_wedge(gq3_context* ctx, const gq3_vec3* u,
                             const gq3_vec3* v, gq3_vec3* out);
/* p ^ (q ^ r) */
GQ3_API gq3_status gq3_wedge_triple_left(gq3_context* ctx, const gq3_vec3* p,
                                         const gq3_vec3* q, const gq3_vec3* r,
                                         gq3_vec3* out);
/* (p ^ q) ^ r */
GQ3_API gq3_status gq3_wedge_triple_right(gq3_context* ctx, const gq3_vec3* p,
                                          const gq3_vec3* q, const gq3_vec3* r,
                                          gq3_vec3* out);

/* matrix representations */
GQ3_API gq3_status gq3_left_matrix(gq3_context* ctx, const gq3_quat* p,
                                   gq3_mat4* out);
GQ3_API gq3_status gq3_right_matrix(gq3_context* ctx, const gq3_quat* p,
                                    gq3_mat4* out);
GQ3_API gq3_status gq3_base_matrices(gq3_context* ctx, const gq3_params* params,
                                     gq3_mat4 out[4]);
GQ3_API gq3_status gq3_det4(gq3_context* ctx, const gq3_mat4* m, double* out);
/* coefficients lowest degree first */
GQ3_API gq3_status gq3_char_poly(gq3_context* ctx, const gq3_quat* p,
                                 double out[5]);
GQ3_API gq3_status gq3_eigenvalues(gq3_context* ctx, const gq3_quat* p,
                                   gq3_eigenpair out[2]);
GQ3_API gq3_status gq3_eigenvectors(gq3_context* ctx, const gq3_quat* p,
                                    gq3_eigenpair out[4]);

/* polar form, powers, roots */
GQ3_API gq3_status gq3_to_polar(gq3_context* ctx, const gq3_quat* p,
                                gq3_polar* out);
GQ3_API gq3_status gq3_demoivre_pow(gq3_context* ctx, const gq3_quat* p, int n,
                                    gq3_quat* out);
GQ3_API gq3_status gq3_matrix_pow(gq3_context* ctx, const gq3_quat* p, int n,
                                  gq3_mat4* out);
GQ3_API gq3_status gq3_euler_exp(gq3_context* ctx, const gq3_vec3* v,
                                 double theta, gq3_quat* out);
GQ3_API gq3_status gq3_euler_exp_matrix(gq3_context* ctx, const gq3_vec3* v,
                                        double theta, gq3_mat4* out);
GQ3_API gq3_status gq3_matrix_roots(gq3_context* ctx, const gq3_quat* p, int n,
                                    gq3_root_set** out);
GQ3_API size_t gq3_root_set_count(const gq3_root_set* set);
GQ3_API gq3_status gq3_root_set_get(const gq3_root_set* set, size_t k,
                                    gq3_mat4* out);
GQ3_API void gq3_root_set_destroy(gq3_root_set* set);
/* *has_period is set to 0 when 2pi/theta is not an integer >= 2. */
GQ3_API gq3_status gq3_power_period(gq3_context* ctx, const gq3_quat* p,
                                    int* has_period, int* period);
GQ3_API gq3_status gq3_scaled_power_relation(gq3_context* ctx,
                                             const gq3_quat* p, int n, int s,
                                             gq3_power_relation* out);

/* Lie structure */
GQ3_API gq3_status gq3_bracket(gq3_context* ctx, const gq3_vec3* x,
                               const gq3_vec3* y, gq3_vec3* out);
GQ3_API gq3_status gq3_metric_eps(gq3_context* ctx, const gq3_params* params,
                                  gq3_mat3* out);
GQ3_API gq3_status gq3_adjoint_group(gq3_context* ctx, const gq3_quat* p,
                                     gq3_mat3* out);
GQ3_API gq3_status gq3_skew_of_axis(gq3_context* ctx, const gq3_vec3* s,
                                    gq3_mat3* out);
GQ3_API gq3_status gq3_adjoint_rodrigues(gq3_context* ctx, const gq3_vec3* axis,
                                         double theta, gq3_mat3* out);
GQ3_API gq3_status gq3_ad_matrix(gq3_context* ctx, const gq3_vec3* x,
                                 gq3_mat3* out);
GQ3_API gq3_status gq3_killing_form(gq3_context* ctx, const gq3_vec3* x,
                                    const gq3_vec3* y, double* out);
GQ3_API gq3_status gq3_killing_matrix(gq3_context* ctx,
                                      const gq3_params* params, gq3_mat3* out);
GQ3_API gq3_status gq3_is_compact(gq3_context* ctx, const gq3_params* params,
                                  int* out);

#ifdef __cplusplus
}
#endif

#endif
