#include "gq3/quaternion.hpp"

#include <cmath>
#include <string>

#include "gq3/error.hpp"

namespace gq3 {

namespace {

template <std::size_t N>
void require_finite(const std::array<double, N>& c) {
  for (double v : c)
    if (!std::isfinite(v))
      throw Error(ErrorCode::InvalidArgument, "components must be finite");
}

}  // namespace

GVec3::GVec3(const ParamTriple& params, double a1, double a2, double a3)
    : GVec3(params, std::array<double, 3>{a1, a2, a3}) {}

GVec3::GVec3(const ParamTriple& params, const std::array<double, 3>& c)
    : params_(params), c_(c) {
  require_finite(c_);
}

GVec3 GVec3::basis(const ParamTriple& params, std::size_t index) {
  if (index >= 3)
    throw Error(ErrorCode::InvalidArgument, "vector basis index out of range");
  std::array<double, 3> c{};
  c[index] = 1.0;
  return {params, c};
}

GQuat GVec3::to_quat() const { return {params_, 0.0, c_[0], c_[1], c_[2]}; }

GVec3 operator+(const GVec3& u, const GVec3& v) {
  require_same(u.params_, v.params_);
  return {u.params_, u.c_[0] + v.c_[0], u.c_[1] + v.c_[1], u.c_[2] + v.c_[2]};
}

GVec3 operator-(const GVec3& u, const GVec3& v) {
  require_same(u.params_, v.params_);
  return {u.params_, u.c_[0] - v.c_[0], u.c_[1] - v.c_[1], u.c_[2] - v.c_[2]};
}

GVec3 operator*(double s, const GVec3& v) {
  return {v.params_, s * v.c_[0], s * v.c_[1], s * v.c_[2]};
}

GQuat::GQuat(const ParamTriple& params, double a0, double a1, double a2,
             double a3)
    : GQuat(params, std::array<double, 4>{a0, a1, a2, a3}) {}

GQuat::GQuat(const ParamTriple& params, const std::array<double, 4>& c)
    : params_(params), c_(c) {
  require_finite(c_);
}

GQuat GQuat::basis(const ParamTriple& params, std::size_t index) {
  if (index >= 4)
    throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  std::array<double, 4> c{};
  c[index] = 1.0;
  return {params, c};
}

GQuat operator+(const GQuat& p, const GQuat& q) {
  require_same(p.params_, q.params_);
  return {p.params_, p.c_[0] + q.c_[0], p.c_[1] + q.c_[1], p.c_[2] + q.c_[2],
          p.c_[3] + q.c_[3]};
}

GQuat operator-(const GQuat& p, const GQuat& q) {
  require_same(p.params_, q.params_);
  return {p.params_, p.c_[0] - q.c_[0], p.c_[1] - q.c_[1], p.c_[2] - q.c_[2],
          p.c_[3] - q.c_[3]};
}

GQuat operator*(double s, const GQuat& p) {
  return {p.params_, s * p.c_[0], s * p.c_[1], s * p.c_[2], s * p.c_[3]};
}

GQuat operator*(const GQuat& p, const GQuat& q) {
  require_same(p.params_, q.params_);
  const ParamTriple& k = p.params_;
  const double l1 = k.lambda1(), l2 = k.lambda2(), l3 = k.lambda3();
  const auto& [a0, a1, a2, a3] = p.c_;
  const auto& [b0, b1, b2, b3] = q.c_;
  return {k,
          a0 * b0 - k.w1() * a1 * b1 - k.w2() * a2 * b2 - k.w3() * a3 * b3,
          a0 * b1 + b0 * a1 + l3 * (a2 * b3 - a3 * b2),
          a0 * b2 + b0 * a2 + l2 * (a3 * b1 - a1 * b3),
          a0 * b3 + b0 * a3 + l1 * (a1 * b2 - a2 * b1)};
}

GQuat add(const GQuat& p, const GQuat& q) { return p + q; }
GQuat sub(const GQuat& p, const GQuat& q) { return p - q; }
GQuat scale(double c, const GQuat& p) { return c * p; }
GQuat mul(const GQuat& p, const GQuat& q) { return p * q; }

GQuat conj(const GQuat& p) {
  return {p.params(), p[0], -p[1], -p[2], -p[3]};
}

double axis_discriminant(const GQuat& p) {
  const ParamTriple& k = p.params();
  return k.w1() * p[1] * p[1] + k.w2() * p[2] * p[2] + k.w3() * p[3] * p[3];
}

double norm(const GQuat& p) { return p[0] * p[0] + axis_discriminant(p); }

double zero_norm_threshold(const GQuat& p) {
  double sq = 0.0;
  for (double v : p.components()) sq += v * v;
  return 1e-12 * (1.0 + sq * std::max(1.0, p.params().max_weight()));
}

GQuat inverse(const GQuat& p) {
  const double n = norm(p);
  if (std::abs(n) <= zero_norm_threshold(p))
    throw Error(ErrorCode::ZeroNorm,
                "quaternion has zero norm (N_p = " + format_real(n) +
                    ") and no inverse");
  return (1.0 / n) * conj(p);
}

double scalar_product(const GQuat& p, const GQuat& q) {
  require_same(p.params(), q.params());
  return p[0] * q[0] + bilinear_f(p.vector_part(), q.vector_part());
}

double bilinear_f(const GVec3& u, const GVec3& v) {
  require_same(u.params(), v.params());
  const ParamTriple& k = u.params();
  return k.w1() * u[0] * v[0] + k.w2() * u[1] * v[1] + k.w3() * u[2] * v[2];
}

GVec3 wedge(const GVec3& u, const GVec3& v) {
  require_same(u.params(), v.params());
  const ParamTriple& k = u.params();
  return {k, k.lambda3() * (u[1] * v[2] - u[2] * v[1]),
          k.lambda2() * (u[2] * v[0] - u[0] * v[2]),
          k.lambda1() * (u[0] * v[1] - u[1] * v[0])};
}

GVec3 wedge_triple_left(const GVec3& p, const GVec3& q, const GVec3& r) {
  return wedge(p, wedge(q, r));
}

GVec3 wedge_triple_left_expanded(const GVec3& p, const GVec3& q,
                                 const GVec3& r) {
  return bilinear_f(p, r) * q - bilinear_f(p, q) * r;
}

GVec3 wedge_triple_right(const GVec3& p, const GVec3& q, const GVec3& r) {
  return wedge(wedge(p, q), r);
}

GVec3 wedge_triple_right_expanded(const GVec3& p, const GVec3& q,
                                  const GVec3& r) {
  return bilinear_f(p, r) * q - bilinear_f(q, r) * p;
}

}  // namespace gq3
