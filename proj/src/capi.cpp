#include "gq3/gq3.h"

#include <exception>
#include <new>
#include <string>
#include <utility>

#include "gq3/error.hpp"
#include "gq3/lie.hpp"
#include "gq3/matrix_rep.hpp"
#include "gq3/params.hpp"
#include "gq3/polar.hpp"

struct gq3_context {
  gq3::Tolerance tol;
  std::string last_error;
};

struct gq3_root_set {
  gq3::RootSet set;
};

namespace {

using gq3::ErrorCode;

gq3_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParamMismatch: return GQ3_PARAM_MISMATCH;
    case ErrorCode::ZeroNorm: return GQ3_ZERO_NORM;
    case ErrorCode::NonElliptic: return GQ3_NON_ELLIPTIC;
    case ErrorCode::DegenerateAxis: return GQ3_DEGENERATE_AXIS;
    case ErrorCode::NonUnit: return GQ3_NON_UNIT;
    case ErrorCode::NotUnitVector: return GQ3_NOT_UNIT_VECTOR;
    case ErrorCode::NotPositiveFamily: return GQ3_NOT_POSITIVE_FAMILY;
    case ErrorCode::NoPeriod: return GQ3_NO_PERIOD;
    case ErrorCode::CongruenceViolation: return GQ3_CONGRUENCE_VIOLATION;
    case ErrorCode::InvalidArgument: return GQ3_INVALID_ARGUMENT;
  }
  return GQ3_INTERNAL;
}

gq3::Tolerance tolerance(const gq3_context* ctx) {
  return ctx ? ctx->tol : gq3::Tolerance{};
}

template <typename F>
gq3_status guard(gq3_context* ctx, F&& body) {
  gq3_status status = GQ3_OK;
  std::string message;
  try {
    std::forward<F>(body)();
  } catch (const gq3::Error& e) {
    status = to_status(e.code());
    message = e.what();
  } catch (const std::bad_alloc&) {
    status = GQ3_INTERNAL;
    message = "out of memory";
  } catch (const std::exception& e) {
    status = GQ3_INTERNAL;
    message = e.what();
  }
  if (ctx) ctx->last_error = std::move(message);
  return status;
}

void require(const void* ptr) {
  if (!ptr) throw gq3::Error(ErrorCode::InvalidArgument, "null pointer argument");
}

template <typename... Ptrs>
void require_all(const Ptrs*... ptrs) {
  (require(ptrs), ...);
}

gq3::ParamTriple from_c(const gq3_params& p) { return {p.l1, p.l2, p.l3}; }

gq3_params to_c(const gq3::ParamTriple& p) {
  return {p.lambda1(), p.lambda2(), p.lambda3()};
}

gq3::GQuat from_c(const gq3_quat& q) {
  return {from_c(q.params), q.c[0], q.c[1], q.c[2], q.c[3]};
}

gq3_quat to_c(const gq3::GQuat& q) {
  gq3_quat out{to_c(q.params()), {}};
  for (std::size_t i = 0; i < 4; ++i) out.c[i] = q[i];
  return out;
}

gq3::GVec3 from_c(const gq3_vec3& v) {
  return {from_c(v.params), v.c[0], v.c[1], v.c[2]};
}

gq3_vec3 to_c(const gq3::GVec3& v) {
  gq3_vec3 out{to_c(v.params()), {v[0], v[1], v[2]}};
  return out;
}

gq3::Mat4 from_c(const gq3_mat4& m) {
  gq3::Mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.a[i] = m.m[i];
  return out;
}

gq3_mat4 to_c(const gq3::Mat4& m) {
  gq3_mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.m[i] = m.a[i];
  return out;
}

gq3_mat3 to_c(const gq3::Mat3& m) {
  gq3_mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.m[i] = m.a[i];
  return out;
}

gq3_eigenpair to_c(const gq3::EigenPair& e) {
  gq3_eigenpair out{};
  out.value = {e.value.real(), e.value.imag()};
  out.multiplicity = e.multiplicity;
  out.has_vector = e.vector.has_value() ? 1 : 0;
  if (e.vector)
    for (std::size_t i = 0; i < 4; ++i)
      out.vector[i] = {(*e.vector)[i].real(), (*e.vector)[i].imag()};
  return out;
}

}  // namespace

extern "C" {

gq3_context* gq3_context_create(void) {
  return new (std::nothrow) gq3_context();
}

void gq3_context_destroy(gq3_context* ctx) { delete ctx; }

gq3_status gq3_context_set_tolerance(gq3_context* ctx, double unit,
                                     double period) {
  return guard(ctx, [&] {
    require(ctx);
    if (!(unit > 0) || !(period > 0))
      throw gq3::Error(ErrorCode::InvalidArgument,
                       "tolerances must be positive");
    ctx->tol.unit = unit;
    ctx->tol.period = period;
  });
}

const char* gq3_last_error(const gq3_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

const char* gq3_status_string(gq3_status status) {
  switch (status) {
    case GQ3_OK: return "Ok";
    case GQ3_PARAM_MISMATCH: return "ParamMismatch";
    case GQ3_ZERO_NORM: return "ZeroNorm";
    case GQ3_NON_ELLIPTIC: return "NonElliptic";
    case GQ3_DEGENERATE_AXIS: return "DegenerateAxis";
    case GQ3_NON_UNIT: return "NonUnit";
    case GQ3_NOT_UNIT_VECTOR: return "NotUnitVector";
    case GQ3_NOT_POSITIVE_FAMILY: return "NotPositiveFamily";
    case GQ3_NO_PERIOD: return "NoPeriod";
    case GQ3_CONGRUENCE_VIOLATION: return "CongruenceViolation";
    case GQ3_INVALID_ARGUMENT: return "InvalidArgument";
    case GQ3_INTERNAL: return "Internal";
  }
  return "Unknown";
}

gq3_status gq3_params_make(gq3_context* ctx, double l1, double l2, double l3,
                           gq3_params* out) {
  return guard(ctx, [&] {
    require(out);
    *out = to_c(gq3::ParamTriple(l1, l2, l3));
  });
}

gq3_status gq3_family(gq3_context* ctx, const char* name, gq3_params* out) {
  return guard(ctx, [&] {
    require_all(name, out);
    *out = to_c(gq3::family_from_name(name));
  });
}

gq3_status gq3_add(gq3_context* ctx, const gq3_quat* p, const gq3_quat* q,
                   gq3_quat* out) {
  return guard(ctx, [&] {
    require_all(p, q, out);
    *out = to_c(gq3::add(from_c(*p), from_c(*q)));
  });
}

gq3_status gq3_sub(gq3_context* ctx, const gq3_quat* p, const gq3_quat* q,
                   gq3_quat* out) {
  return guard(ctx, [&] {
    require_all(p, q, out);
    *out = to_c(gq3::sub(from_c(*p), from_c(*q)));
  });
}

gq3_status gq3_scale(gq3_context* ctx, double c, const gq3_quat* p,
                     gq3_quat* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = to_c(gq3::scale(c, from_c(*p)));
  });
}

gq3_status gq3_mul(gq3_context* ctx, const gq3_quat* p, const gq3_quat* q,
                   gq3_quat* out) {
  return guard(ctx, [&] {
    require_all(p, q, out);
    *out = to_c(gq3::mul(from_c(*p), from_c(*q)));
  });
}

gq3_status gq3_conj(gq3_context* ctx, const gq3_quat* p, gq3_quat* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = to_c(gq3::conj(from_c(*p)));
  });
}

gq3_status gq3_norm(gq3_context* ctx, const gq3_quat* p, double* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = gq3::norm(from_c(*p));
  });
}

gq3_status gq3_inverse(gq3_context* ctx, const gq3_quat* p, gq3_quat* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = to_c(gq3::inverse(from_c(*p)));
  });
}

gq3_status gq3_scalar_product(gq3_context* ctx, const gq3_quat* p,
                              const gq3_quat* q, double* out) {
  return guard(ctx, [&] {
    require_all(p, q, out);
    *out = gq3::scalar_product(from_c(*p), from_c(*q));
  });
}

gq3_status gq3_bilinear_f(gq3_context* ctx, const gq3_vec3* u,
                          const gq3_vec3* v, double* out) {
  return guard(ctx, [&] {
    require_all(u, v, out);
    *out = gq3::bilinear_f(from_c(*u), from_c(*v));
  });
}

gq3_status gq3_wedge(gq3_context* ctx, const gq3_vec3* u, const gq3_vec3* v,
                     gq3_vec3* out) {
  return guard(ctx, [&] {
    require_all(u, v, out);
    *out = to_c(gq3::wedge(from_c(*u), from_c(*v)));
  });
}

gq3_status gq3_wedge_triple_left(gq3_context* ctx, const gq3_vec3* p,
                                 const gq3_vec3* q, const gq3_vec3* r,
                                 gq3_vec3* out) {
  return guard(ctx, [&] {
    require_all(p, q, r, out);
    *out = to_c(gq3::wedge_triple_left(from_c(*p), from_c(*q), from_c(*r)));
  });
}

gq3_status gq3_wedge_triple_right(gq3_context* ctx, const gq3_vec3* p,
                                  const gq3_vec3* q, const gq3_vec3* r,
                                  gq3_vec3* out) {
  return guard(ctx, [&] {
    require_all(p, q, r, out);
    *out = to_c(gq3::wedge_triple_right(from_c(*p), from_c(*q), from_c(*r)));
  });
}

gq3_status gq3_left_matrix(gq3_context* ctx, const gq3_quat* p,
                           gq3_mat4* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = to_c(gq3::left_matrix(from_c(*p)));
  });
}

gq3_status gq3_right_matrix(gq3_context* ctx, const gq3_quat* p,
                            gq3_mat4* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = to_c(gq3::right_matrix(from_c(*p)));
  });
}

gq3_status gq3_base_matrices(gq3_context* ctx, const gq3_params* params,
                             gq3_mat4 out[4]) {
  return guard(ctx, [&] {
    require_all(params, out);
    const auto base = gq3::base_matrices(from_c(*params));
    for (std::size_t i = 0; i < 4; ++i) out[i] = to_c(base[i]);
  });
}

gq3_status gq3_det4(gq3_context* ctx, const gq3_mat4* m, double* out) {
  return guard(ctx, [&] {
    require_all(m, out);
    *out = gq3::det4(from_c(*m));
  });
}

gq3_status gq3_char_poly(gq3_context* ctx, const gq3_quat* p, double out[5]) {
  return guard(ctx, [&] {
    require_all(p, out);
    const auto poly = gq3::char_poly(from_c(*p));
    for (std::size_t i = 0; i < 5; ++i) out[i] = poly.coefficients[i];
  });
}

gq3_status gq3_eigenvalues(gq3_context* ctx, const gq3_quat* p,
                           gq3_eigenpair out[2]) {
  return guard(ctx, [&] {
    require_all(p, out);
    const auto pairs = gq3::eigenvalues(from_c(*p));
    for (std::size_t i = 0; i < 2; ++i) out[i] = to_c(pairs[i]);
  });
}

gq3_status gq3_eigenvectors(gq3_context* ctx, const gq3_quat* p,
                            gq3_eigenpair out[4]) {
  return guard(ctx, [&] {
    require_all(p, out);
    const auto pairs = gq3::eigenvectors(from_c(*p));
    for (std::size_t i = 0; i < 4; ++i) out[i] = to_c(pairs[i]);
  });
}

gq3_status gq3_to_polar(gq3_context* ctx, const gq3_quat* p, gq3_polar* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    const gq3::PolarForm polar = gq3::to_polar(from_c(*p));
    gq3_polar result{};
    result.modulus = polar.modulus;
    result.theta = polar.theta;
    result.has_axis = polar.axis.has_value() ? 1 : 0;
    result.axis.params = p->params;
    if (polar.axis) result.axis = to_c(*polar.axis);
    *out = result;
  });
}

gq3_status gq3_demoivre_pow(gq3_context* ctx, const gq3_quat* p, int n,
                            gq3_quat* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = to_c(gq3::demoivre_pow(from_c(*p), n));
  });
}

gq3_status gq3_matrix_pow(gq3_context* ctx, const gq3_quat* p, int n,
                          gq3_mat4* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = to_c(gq3::matrix_pow(from_c(*p), n, tolerance(ctx)));
  });
}

gq3_status gq3_euler_exp(gq3_context* ctx, const gq3_vec3* v, double theta,
                         gq3_quat* out) {
  return guard(ctx, [&] {
    require_all(v, out);
    *out = to_c(gq3::euler_exp(from_c(*v), theta, tolerance(ctx)));
  });
}

gq3_status gq3_euler_exp_matrix(gq3_context* ctx, const gq3_vec3* v,
                                double theta, gq3_mat4* out) {
  return guard(ctx, [&] {
    require_all(v, out);
    *out = to_c(gq3::euler_exp_matrix(from_c(*v), theta, tolerance(ctx)));
  });
}

gq3_status gq3_matrix_roots(gq3_context* ctx, const gq3_quat* p, int n,
                            gq3_root_set** out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = nullptr;
    auto set = new gq3_root_set{gq3::matrix_roots(from_c(*p), n, tolerance(ctx))};
    *out = set;
  });
}

size_t gq3_root_set_count(const gq3_root_set* set) {
  return set ? set->set.roots.size() : 0;
}

gq3_status gq3_root_set_get(const gq3_root_set* set, size_t k, gq3_mat4* out) {
  return guard(nullptr, [&] {
    require_all(set, out);
    if (k >= set->set.roots.size())
      throw gq3::Error(ErrorCode::InvalidArgument, "root index out of range");
    *out = to_c(set->set.roots[k]);
  });
}

void gq3_root_set_destroy(gq3_root_set* set) { delete set; }

gq3_status gq3_power_period(gq3_context* ctx, const gq3_quat* p,
                            int* has_period, int* period) {
  return guard(ctx, [&] {
    require_all(p, has_period, period);
    const auto m = gq3::power_period(from_c(*p), tolerance(ctx));
    *has_period = m.has_value() ? 1 : 0;
    *period = m.value_or(0);
  });
}

gq3_status gq3_scaled_power_relation(gq3_context* ctx, const gq3_quat* p,
                                     int n, int s, gq3_power_relation* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    const auto rel =
        gq3::scaled_power_relation(from_c(*p), n, s, tolerance(ctx));
    *out = {to_c(rel.scaled), to_c(rel.direct), rel.period};
  });
}

gq3_status gq3_bracket(gq3_context* ctx, const gq3_vec3* x, const gq3_vec3* y,
                       gq3_vec3* out) {
  return guard(ctx, [&] {
    require_all(x, y, out);
    *out = to_c(gq3::bracket(from_c(*x), from_c(*y)));
  });
}

gq3_status gq3_metric_eps(gq3_context* ctx, const gq3_params* params,
                          gq3_mat3* out) {
  return guard(ctx, [&] {
    require_all(params, out);
    *out = to_c(gq3::metric_eps(from_c(*params)));
  });
}

gq3_status gq3_adjoint_group(gq3_context* ctx, const gq3_quat* p,
                             gq3_mat3* out) {
  return guard(ctx, [&] {
    require_all(p, out);
    *out = to_c(gq3::adjoint_group(from_c(*p)));
  });
}

gq3_status gq3_skew_of_axis(gq3_context* ctx, const gq3_vec3* s,
                            gq3_mat3* out) {
  return guard(ctx, [&] {
    require_all(s, out);
    *out = to_c(gq3::skew_of_axis(from_c(*s)));
  });
}

gq3_status gq3_adjoint_rodrigues(gq3_context* ctx, const gq3_vec3* axis,
                                 double theta, gq3_mat3* out) {
  return guard(ctx, [&] {
    require_all(axis, out);
    *out = to_c(gq3::adjoint_rodrigues(from_c(*axis), theta, tolerance(ctx)));
  });
}

gq3_status gq3_ad_matrix(gq3_context* ctx, const gq3_vec3* x, gq3_mat3* out) {
  return guard(ctx, [&] {
    require_all(x, out);
    *out = to_c(gq3::ad_matrix(from_c(*x)));
  });
}

gq3_status gq3_killing_form(gq3_context* ctx, const gq3_vec3* x,
                            const gq3_vec3* y, double* out) {
  return guard(ctx, [&] {
    require_all(x, y, out);
    *out = gq3::killing_form(from_c(*x), from_c(*y));
  });
}

gq3_status gq3_killing_matrix(gq3_context* ctx, const gq3_params* params,
                              gq3_mat3* out) {
  return guard(ctx, [&] {
    require_all(params, out);
    *out = to_c(gq3::killing_matrix(from_c(*params)));
  });
}

gq3_status gq3_is_compact(gq3_context* ctx, const gq3_params* params,
                          int* out) {
  return guard(ctx, [&] {
    require_all(params, out);
    *out = gq3::is_compact(from_c(*params)) ? 1 : 0;
  });
}

}  // extern "C"
