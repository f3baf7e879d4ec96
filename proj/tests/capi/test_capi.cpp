#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <numbers>
#include <string>

#include "gq3/gq3.h"

namespace {

struct ContextDeleter {
  void operator()(gq3_context* c) const { gq3_context_destroy(c); }
};
using Context = std::unique_ptr<gq3_context, ContextDeleter>;

constexpr gq3_params kHamilton{1, 1, 1};
constexpr gq3_params kSplit{1, 1, -1};

gq3_quat quat(gq3_params k, double a0, double a1, double a2, double a3) {
  return {k, {a0, a1, a2, a3}};
}

gq3_vec3 vec(gq3_params k, double a1, double a2, double a3) { return {k, {a1, a2, a3}}; }

}  // namespace

TEST(CApi, StatusStringsAreDistinct) {
  for (int a = GQ3_OK; a <= GQ3_INTERNAL; ++a)
    for (int b = a + 1; b <= GQ3_INTERNAL; ++b)
      EXPECT_STRNE(gq3_status_string(static_cast<gq3_status>(a)),
                   gq3_status_string(static_cast<gq3_status>(b)));
  EXPECT_STREQ(gq3_status_string(GQ3_ZERO_NORM), "ZeroNorm");
}

TEST(CApi, MulAndLastError) {
  Context ctx(gq3_context_create());
  const gq3_quat e1 = quat(kHamilton, 0, 1, 0, 0), e2 = quat(kHamilton, 0, 0, 1, 0);
  gq3_quat out;
  ASSERT_EQ(gq3_mul(ctx.get(), &e1, &e2, &out), GQ3_OK);
  EXPECT_EQ(out.c[3], 1);
  EXPECT_STREQ(gq3_last_error(ctx.get()), "");

  const gq3_quat other = quat(kSplit, 0, 0, 1, 0);
  EXPECT_EQ(gq3_mul(ctx.get(), &e1, &other, &out), GQ3_PARAM_MISMATCH);
  EXPECT_GT(std::strlen(gq3_last_error(ctx.get())), 0u);
  EXPECT_EQ(gq3_mul(ctx.get(), &e1, &e2, &out), GQ3_OK);
  EXPECT_STREQ(gq3_last_error(ctx.get()), "");
}

TEST(CApi, NullContextAndNullPointers) {
  const gq3_quat p = quat(kHamilton, 1, 2, 3, 4);
  double n = 0;
  EXPECT_EQ(gq3_norm(nullptr, &p, &n), GQ3_OK);
  EXPECT_EQ(n, 30);
  EXPECT_EQ(gq3_norm(nullptr, &p, nullptr), GQ3_INVALID_ARGUMENT);
  EXPECT_EQ(gq3_norm(nullptr, nullptr, &n), GQ3_INVALID_ARGUMENT);
  EXPECT_STREQ(gq3_last_error(nullptr), "");
}

TEST(CApi, ParamsAndFamilies) {
  Context ctx(gq3_context_create());
  gq3_params k;
  ASSERT_EQ(gq3_family(ctx.get(), "split", &k), GQ3_OK);
  EXPECT_EQ(k.l3, -1);
  ASSERT_EQ(gq3_family(ctx.get(), "2param:2,3", &k), GQ3_OK);
  EXPECT_EQ(k.l2, 2);
  EXPECT_EQ(gq3_family(ctx.get(), "nope", &k), GQ3_INVALID_ARGUMENT);
  EXPECT_EQ(gq3_params_make(ctx.get(), 1, NAN, 1, &k), GQ3_INVALID_ARGUMENT);
  const gq3_quat bad = quat({1, INFINITY, 1}, 1, 0, 0, 0);
  gq3_quat out;
  EXPECT_EQ(gq3_conj(ctx.get(), &bad, &out), GQ3_INVALID_ARGUMENT);
}

TEST(CApi, ZeroNormAndInverse) {
  Context ctx(gq3_context_create());
  const gq3_quat null = quat(kSplit, 1, 0, 1, 0);
  gq3_quat out;
  EXPECT_EQ(gq3_inverse(ctx.get(), &null, &out), GQ3_ZERO_NORM);
  const gq3_quat p = quat(kHamilton, 0, 1, 0, 0);
  ASSERT_EQ(gq3_inverse(ctx.get(), &p, &out), GQ3_OK);
  EXPECT_EQ(out.c[1], -1);
}

TEST(CApi, MatricesAndSpectrum) {
  Context ctx(gq3_context_create());
  const gq3_quat p = quat({2, 3, 5}, 1, 0.5, -1, 2);
  gq3_mat4 m;
  ASSERT_EQ(gq3_left_matrix(ctx.get(), &p, &m), GQ3_OK);
  double det = 0, n = 0;
  ASSERT_EQ(gq3_det4(ctx.get(), &m, &det), GQ3_OK);
  ASSERT_EQ(gq3_norm(ctx.get(), &p, &n), GQ3_OK);
  EXPECT_NEAR(det, n * n, 1e-9 * n * n);
  double poly[5];
  ASSERT_EQ(gq3_char_poly(ctx.get(), &p, poly), GQ3_OK);
  EXPECT_EQ(poly[4], 1);
  gq3_eigenpair values[2];
  ASSERT_EQ(gq3_eigenvalues(ctx.get(), &p, values), GQ3_OK);
  EXPECT_EQ(values[0].multiplicity, 2);
  EXPECT_EQ(values[0].has_vector, 0);
  gq3_eigenpair vectors[4];
  ASSERT_EQ(gq3_eigenvectors(ctx.get(), &p, vectors), GQ3_OK);
  EXPECT_EQ(vectors[0].has_vector, 1);
  const gq3_quat axis_only = quat(kHamilton, 1, 1, 0, 0);
  EXPECT_EQ(gq3_eigenvectors(ctx.get(), &axis_only, vectors), GQ3_DEGENERATE_AXIS);
  gq3_mat4 base[4];
  ASSERT_EQ(gq3_base_matrices(ctx.get(), &kHamilton, base), GQ3_OK);
  EXPECT_EQ(base[0].m[0], 1);
  ASSERT_EQ(gq3_right_matrix(ctx.get(), &p, &m), GQ3_OK);
}

TEST(CApi, PolarPowersRootsPeriod) {
  Context ctx(gq3_context_create());
  const gq3_quat p = quat(kHamilton, -0.5, 0.5, 0.5, 0.5);
  gq3_polar polar;
  ASSERT_EQ(gq3_to_polar(ctx.get(), &p, &polar), GQ3_OK);
  EXPECT_NEAR(polar.theta, 2 * std::numbers::pi / 3, 1e-12);
  EXPECT_EQ(polar.has_axis, 1);
  const gq3_quat scalar = quat(kHamilton, -2, 0, 0, 0);
  ASSERT_EQ(gq3_to_polar(ctx.get(), &scalar, &polar), GQ3_OK);
  EXPECT_EQ(polar.has_axis, 0);

  gq3_quat out;
  ASSERT_EQ(gq3_demoivre_pow(ctx.get(), &p, 21, &out), GQ3_OK);
  EXPECT_NEAR(out.c[0], 1, 1e-10);
  gq3_mat4 m;
  ASSERT_EQ(gq3_matrix_pow(ctx.get(), &p, 3, &m), GQ3_OK);
  EXPECT_NEAR(m.m[0], 1, 1e-12);
  const gq3_quat big = quat(kHamilton, 2, 0, 0, 0);
  EXPECT_EQ(gq3_matrix_pow(ctx.get(), &big, 3, &m), GQ3_NON_UNIT);

  int has = 0, period = 0;
  ASSERT_EQ(gq3_power_period(ctx.get(), &p, &has, &period), GQ3_OK);
  EXPECT_EQ(has, 1);
  EXPECT_EQ(period, 3);

  gq3_root_set* roots = nullptr;
  ASSERT_EQ(gq3_matrix_roots(ctx.get(), &p, 4, &roots), GQ3_OK);
  EXPECT_EQ(gq3_root_set_count(roots), 4u);
  EXPECT_EQ(gq3_root_set_get(roots, 3, &m), GQ3_OK);
  EXPECT_EQ(gq3_root_set_get(roots, 4, &m), GQ3_INVALID_ARGUMENT);
  gq3_root_set_destroy(roots);
  roots = reinterpret_cast<gq3_root_set*>(0x1);
  EXPECT_EQ(gq3_matrix_roots(ctx.get(), &p, 0, &roots), GQ3_INVALID_ARGUMENT);
  EXPECT_EQ(roots, nullptr);

  gq3_power_relation rel;
  const gq3_quat scaled = quat(kHamilton, -1, 1, 1, 1);
  ASSERT_EQ(gq3_scaled_power_relation(ctx.get(), &scaled, 4, 1, &rel), GQ3_OK);
  EXPECT_EQ(rel.period, 3);
  EXPECT_NEAR(rel.scaled.c[0], -8, 1e-12);
  EXPECT_EQ(gq3_scaled_power_relation(ctx.get(), &scaled, 4, 2, &rel),
            GQ3_CONGRUENCE_VIOLATION);
  const gq3_quat irrational = quat(kHamilton, std::cos(1.0), std::sin(1.0), 0, 0);
  EXPECT_EQ(gq3_scaled_power_relation(ctx.get(), &irrational, 4, 2, &rel), GQ3_NO_PERIOD);
}

TEST(CApi, ToleranceOverride) {
  Context ctx(gq3_context_create());
  const gq3_quat rough = quat(kHamilton, 0.7071068, 0.5, -0.3535534, 0.3535534);
  int has = 0, period = 0;
  EXPECT_EQ(gq3_power_period(ctx.get(), &rough, &has, &period), GQ3_NON_UNIT);
  ASSERT_EQ(gq3_context_set_tolerance(ctx.get(), 1e-6, 1e-6), GQ3_OK);
  ASSERT_EQ(gq3_power_period(ctx.get(), &rough, &has, &period), GQ3_OK);
  EXPECT_EQ(period, 8);
  EXPECT_EQ(gq3_context_set_tolerance(ctx.get(), -1, 1e-6), GQ3_INVALID_ARGUMENT);
}

TEST(CApi, EulerAndLie) {
  Context ctx(gq3_context_create());
  const gq3_vec3 v = vec(kHamilton, 0, 0.6, 0.8);
  gq3_quat q;
  ASSERT_EQ(gq3_euler_exp(ctx.get(), &v, std::numbers::pi, &q), GQ3_OK);
  EXPECT_NEAR(q.c[0], -1, 1e-15);
  const gq3_vec3 long_v = vec(kHamilton, 1, 1, 0);
  EXPECT_EQ(gq3_euler_exp(ctx.get(), &long_v, 1, &q), GQ3_NOT_UNIT_VECTOR);
  gq3_mat4 m4;
  EXPECT_EQ(gq3_euler_exp_matrix(ctx.get(), &long_v, 1, &m4), GQ3_NOT_UNIT_VECTOR);

  const gq3_vec3 e1 = vec(kSplit, 1, 0, 0), e2 = vec(kSplit, 0, 1, 0);
  gq3_vec3 out;
  ASSERT_EQ(gq3_bracket(ctx.get(), &e1, &e2, &out), GQ3_OK);
  EXPECT_EQ(out.c[2], 2);
  double f = 0;
  ASSERT_EQ(gq3_killing_form(ctx.get(), &e2, &e2, &f), GQ3_OK);
  EXPECT_EQ(f, 8);
  ASSERT_EQ(gq3_bilinear_f(ctx.get(), &e2, &e2, &f), GQ3_OK);
  EXPECT_EQ(f, -1);
  gq3_mat3 m3;
  ASSERT_EQ(gq3_killing_matrix(ctx.get(), &kSplit, &m3), GQ3_OK);
  EXPECT_EQ(m3.m[4], 8);
  ASSERT_EQ(gq3_metric_eps(ctx.get(), &kSplit, &m3), GQ3_OK);
  EXPECT_EQ(m3.m[8], -1);
  EXPECT_EQ(gq3_adjoint_rodrigues(ctx.get(), &e1, 1, &m3), GQ3_NOT_POSITIVE_FAMILY);
  ASSERT_EQ(gq3_ad_matrix(ctx.get(), &e1, &m3), GQ3_OK);
  ASSERT_EQ(gq3_skew_of_axis(ctx.get(), &e1, &m3), GQ3_OK);
  const gq3_quat u = quat(kSplit, 1, 0, 0, 0);
  ASSERT_EQ(gq3_adjoint_group(ctx.get(), &u, &m3), GQ3_OK);
  EXPECT_EQ(m3.m[0], 1);
  int compact = -1;
  ASSERT_EQ(gq3_is_compact(ctx.get(), &kSplit, &compact), GQ3_OK);
  EXPECT_EQ(compact, 0);
  ASSERT_EQ(gq3_wedge(ctx.get(), &e1, &e2, &out), GQ3_OK);
  EXPECT_EQ(out.c[2], 1);
  ASSERT_EQ(gq3_wedge_triple_left(ctx.get(), &e1, &e2, &e1, &out), GQ3_OK);
  ASSERT_EQ(gq3_wedge_triple_right(ctx.get(), &e1, &e2, &e1, &out), GQ3_OK);
}

TEST(CApi, ArithmeticRoundTrip) {
  Context ctx(gq3_context_create());
  const gq3_quat p = quat({2, 3, 5}, 1, 2, 3, 4), q = quat({2, 3, 5}, 4, 3, 2, 1);
  gq3_quat sum, diff, scaled;
  ASSERT_EQ(gq3_add(ctx.get(), &p, &q, &sum), GQ3_OK);
  ASSERT_EQ(gq3_sub(ctx.get(), &sum, &q, &diff), GQ3_OK);
  ASSERT_EQ(gq3_scale(ctx.get(), 2, &diff, &scaled), GQ3_OK);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(scaled.c[i], 2 * p.c[i]);
  double sp = 0;
  ASSERT_EQ(gq3_scalar_product(ctx.get(), &p, &p, &sp), GQ3_OK);
  EXPECT_EQ(sp, 1 + 6 * 4 + 10 * 9 + 15 * 16);
}
