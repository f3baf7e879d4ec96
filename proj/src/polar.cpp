#include "gq3/polar.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gq3/error.hpp"
#include "gq3/matrix_rep.hpp"

namespace gq3 {

namespace {

bool has_zero_vector(const GQuat& p) {
  return p[1] == 0.0 && p[2] == 0.0 && p[3] == 0.0;
}

void require_unit(const GQuat& p, const Tolerance& tol) {
  const double n = norm(p);
  if (std::abs(n - 1.0) > tol.unit)
    throw Error(ErrorCode::NonUnit,
                "expected a unit quaternion, got N_p = " + format_real(n));
}

void require_unit_vector(const GVec3& v, const Tolerance& tol) {
  const double n = bilinear_f(v, v);
  if (std::abs(n - 1.0) > tol.unit)
    throw Error(ErrorCode::NotUnitVector,
                "expected f(v, v) = 1, got " + format_real(n));
}

}  // namespace

GQuat PolarForm::recompose(const ParamTriple& params) const {
  const double c = modulus * std::cos(theta);
  if (!axis) return GQuat::scalar(params, c);
  const double s = modulus * std::sin(theta);
  require_same(params, axis->params());
  return {params, c, s * (*axis)[0], s * (*axis)[1], s * (*axis)[2]};
}

PolarForm to_polar(const GQuat& p) {
  if (has_zero_vector(p)) {
    if (p[0] == 0.0)
      throw Error(ErrorCode::ZeroNorm, "the zero quaternion has no polar form");
    return {std::abs(p[0]), p[0] > 0.0 ? 0.0 : std::numbers::pi, std::nullopt};
  }
  const double d = axis_discriminant(p);
  const double vec_sq = p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
  if (d <= 1e-12 * vec_sq * p.params().max_weight())
    throw Error(ErrorCode::NonElliptic,
                "vector part has f(V, V) = " + format_real(d) +
                    " <= 0; no circular polar form");
  const double n = norm(p);
  if (n <= zero_norm_threshold(p))
    throw Error(ErrorCode::ZeroNorm, "N_p <= 0; no polar form");
  const double root_d = std::sqrt(d);
  return {std::sqrt(n), std::atan2(root_d, p[0]),
          GVec3(p.params(), p[1] / root_d, p[2] / root_d, p[3] / root_d)};
}

GQuat demoivre_pow(const GQuat& p, int n) {
  const PolarForm polar = to_polar(p);
  if (!polar.axis) return GQuat::scalar(p.params(), std::pow(p[0], n));
  const double r = std::pow(polar.modulus, n);
  const double angle = n * polar.theta;
  const double c = r * std::cos(angle);
  const double s = r * std::sin(angle);
  const GVec3& axis = *polar.axis;
  return {p.params(), c, s * axis[0], s * axis[1], s * axis[2]};
}

Mat4 polar_matrix(const GVec3& axis, double angle) {
  const double s = std::sin(angle);
  return left_matrix(
      GQuat(axis.params(), std::cos(angle), s * axis[0], s * axis[1],
            s * axis[2]));
}

Mat4 matrix_pow(const GQuat& p, int n, const Tolerance& tol) {
  require_unit(p, tol);
  const PolarForm polar = to_polar(p);
  if (!polar.axis) return std::pow(p[0], n) * Mat4::identity();
  // n < 0 falls out of the same entries: cos is even and sin is odd.
  return polar_matrix(*polar.axis, n * polar.theta);
}

GQuat euler_exp(const GVec3& v, double theta, const Tolerance& tol) {
  require_unit_vector(v, tol);
  const double s = std::sin(theta);
  return {v.params(), std::cos(theta), s * v[0], s * v[1], s * v[2]};
}

Mat4 euler_exp_matrix(const GVec3& v, double theta, const Tolerance& tol) {
  require_unit_vector(v, tol);
  return std::cos(theta) * Mat4::identity() +
         std::sin(theta) * left_matrix(v.to_quat());
}

RootSet matrix_roots(const GQuat& p, int n, const Tolerance& tol) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "root degree must be >= 1");
  require_unit(p, tol);
  const PolarForm polar = to_polar(p);
  if (!polar.axis)
    throw Error(ErrorCode::NonElliptic,
                "scalar quaternion has no axis to build roots around");
  RootSet set;
  set.degree = n;
  set.roots.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    set.roots.push_back(polar_matrix(
        *polar.axis, (polar.theta + 2.0 * std::numbers::pi * k) / n));
  return set;
}

std::optional<int> power_period(const GQuat& p, const Tolerance& tol) {
  require_unit(p, tol);
  const PolarForm polar = to_polar(p);
  if (polar.theta == 0.0) return std::nullopt;
  const double ratio = 2.0 * std::numbers::pi / polar.theta;
  const double m = std::round(ratio);
  if (m >= 2.0 && std::abs(ratio - m) < tol.period * ratio)
    return static_cast<int>(m);
  return std::nullopt;
}

PowerRelation scaled_power_relation(const GQuat& p, int n, int s,
                                    const Tolerance& tol) {
  const PolarForm polar = to_polar(p);
  const GQuat unit = (1.0 / polar.modulus) * p;
  const std::optional<int> m = power_period(unit, tol);
  if (!m)
    throw Error(ErrorCode::NoPeriod,
                "2*pi/theta is not an integer >= 2 for this quaternion");
  if ((n - s) % *m != 0)
    throw Error(ErrorCode::CongruenceViolation,
                std::to_string(n) + " and " + std::to_string(s) +
                    " are not congruent modulo " + std::to_string(*m));
  return {std::pow(polar.modulus, n - s) * demoivre_pow(p, s),
          demoivre_pow(p, n), *m};
}

}  // namespace gq3
