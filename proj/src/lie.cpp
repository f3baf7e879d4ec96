#include "gq3/lie.hpp"

#include <cmath>

#include "gq3/error.hpp"

namespace gq3 {

GVec3 bracket(const GVec3& x, const GVec3& y) {
  require_same(x.params(), y.params());
  const ParamTriple& k = x.params();
  return {k, 2.0 * k.lambda3() * (x[1] * y[2] - x[2] * y[1]),
          2.0 * k.lambda2() * (x[2] * y[0] - x[0] * y[2]),
          2.0 * k.lambda1() * (x[0] * y[1] - x[1] * y[0])};
}

Mat3 metric_eps(const ParamTriple& params) {
  Mat3 eps;
  eps(0, 0) = params.w1();
  eps(1, 1) = params.w2();
  eps(2, 2) = params.w3();
  return eps;
}

Mat3 adjoint_group(const GQuat& p) {
  if (std::abs(norm(p)) <= zero_norm_threshold(p))
    throw Error(ErrorCode::ZeroNorm, "adjoint of a null quaternion");
  const GQuat pc = conj(p);
  Mat3 ad;
  for (std::size_t j = 0; j < 3; ++j) {
    const GQuat image = p * GQuat::basis(p.params(), j + 1) * pc;
    for (std::size_t i = 0; i < 3; ++i) ad(i, j) = image[i + 1];
  }
  return ad;
}

Mat3 skew_of_axis(const GVec3& s) {
  const ParamTriple& k = s.params();
  const double l1 = k.lambda1(), l2 = k.lambda2(), l3 = k.lambda3();
  return {{0.0, -l3 * s[2], l3 * s[1],
           l2 * s[2], 0.0, -l2 * s[0],
           -l1 * s[1], l1 * s[0], 0.0}};
}

Mat3 adjoint_rodrigues(const GVec3& axis, double theta, const Tolerance& tol) {
  if (!axis.params().all_positive())
    throw Error(ErrorCode::NotPositiveFamily,
                "the rotation form needs every lambda > 0");
  if (std::abs(bilinear_f(axis, axis) - 1.0) > tol.unit)
    throw Error(ErrorCode::NotUnitVector, "axis must satisfy f(s, s) = 1");
  const Mat3 s = skew_of_axis(axis);
  return Mat3::identity() + std::sin(theta) * s +
         (1.0 - std::cos(theta)) * (s * s);
}

Mat3 ad_matrix(const GVec3& x) { return 2.0 * skew_of_axis(x); }

double killing_form(const GVec3& x, const GVec3& y) {
  require_same(x.params(), y.params());
  return (ad_matrix(x) * ad_matrix(y)).trace();
}

Mat3 killing_matrix(const ParamTriple& params) {
  Mat3 k;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      k(i, j) = killing_form(GVec3::basis(params, i), GVec3::basis(params, j));
  return k;
}

bool is_compact(const ParamTriple& params) { return params.all_positive(); }

}  // namespace gq3
