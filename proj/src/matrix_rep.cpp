#include "gq3/matrix_rep.hpp"

#include <cmath>
#include <utility>

#include "gq3/error.hpp"

namespace gq3 {

Mat4 left_matrix(const GQuat& p) {
  const ParamTriple& k = p.params();
  const double l1 = k.lambda1(), l2 = k.lambda2(), l3 = k.lambda3();
  const auto& [a0, a1, a2, a3] = p.components();
  return {{a0, -k.w1() * a1, -k.w2() * a2, -k.w3() * a3,
           a1, a0, -l3 * a3, l3 * a2,
           a2, l2 * a3, a0, -l2 * a1,
           a3, -l1 * a2, l1 * a1, a0}};
}

Mat4 right_matrix(const GQuat& p) {
  const ParamTriple& k = p.params();
  const double l1 = k.lambda1(), l2 = k.lambda2(), l3 = k.lambda3();
  const auto& [a0, a1, a2, a3] = p.components();
  return {{a0, -k.w1() * a1, -k.w2() * a2, -k.w3() * a3,
           a1, a0, l3 * a3, -l3 * a2,
           a2, -l2 * a3, a0, l2 * a1,
           a3, l1 * a2, -l1 * a1, a0}};
}

std::array<Mat4, 4> base_matrices(const ParamTriple& params) {
  return {left_matrix(GQuat::basis(params, 0)),
          left_matrix(GQuat::basis(params, 1)),
          left_matrix(GQuat::basis(params, 2)),
          left_matrix(GQuat::basis(params, 3))};
}

double det4(const Mat4& m) {
  Mat4 u = m;
  double det = 1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(u(r, col)) > std::abs(u(pivot, col))) pivot = r;
    if (u(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < 4; ++c) std::swap(u(col, c), u(pivot, c));
      det = -det;
    }
    det *= u(col, col);
    for (std::size_t r = col + 1; r < 4; ++r) {
      const double factor = u(r, col) / u(col, col);
      for (std::size_t c = col; c < 4; ++c) u(r, c) -= factor * u(col, c);
    }
  }
  return det;
}

std::complex<double> CharPoly::operator()(std::complex<double> t) const {
  const std::complex<double> quad = t * t - 2.0 * a0_ * t + norm_;
  return quad * quad;
}

std::complex<double> CharPoly::evaluate_expanded(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

CharPoly char_poly(const GQuat& p) {
  // (t^2 + b t + c)^2 = t^4 + 2b t^3 + (b^2 + 2c) t^2 + 2bc t + c^2
  const double b = -2.0 * p[0];
  const double c = norm(p);
  CharPoly poly;
  poly.coefficients = {c * c, 2.0 * b * c, b * b + 2.0 * c, 2.0 * b, 1.0};
  poly.a0_ = p[0];
  poly.norm_ = c;
  return poly;
}

namespace {

std::complex<double> root_of_minus_d(const GQuat& p) {
  return std::sqrt(std::complex<double>(-axis_discriminant(p), 0.0));
}

}  // namespace

std::array<EigenPair, 2> eigenvalues(const GQuat& p) {
  const std::complex<double> r = root_of_minus_d(p);
  const std::complex<double> a0 = p[0];
  return {EigenPair{a0 + r, std::nullopt, 2},
          EigenPair{a0 - r, std::nullopt, 2}};
}

std::array<EigenPair, 4> eigenvectors(const GQuat& p) {
  const ParamTriple& k = p.params();
  const double l1 = k.lambda1(), l2 = k.lambda2();
  const auto& [a0, a1, a2, a3] = p.components();
  const double den = l1 * a2 * a2 + l2 * a3 * a3;
  const double den_scale = std::abs(l1) * a2 * a2 + std::abs(l2) * a3 * a3;
  if (den == 0.0 || std::abs(den) <= 1e-12 * den_scale)
    throw Error(ErrorCode::DegenerateAxis,
                "l1*a2^2 + l2*a3^2 vanishes; closed-form eigenvectors are "
                "undefined");

  const std::complex<double> r = root_of_minus_d(p);
  const std::complex<double> t1 = a0 + r;
  const std::complex<double> t3 = a0 - r;
  const double w1 = k.w1();
  using C = std::complex<double>;
  using V = std::array<C, 4>;

  const V v1{(l1 * a2 * r - w1 * a1 * a3) / den, (a3 * r + l1 * a1 * a2) / den,
             C(1.0), C(0.0)};
  const V v2{(l2 * a3 * r + w1 * a1 * a2) / den,
             -(a2 * r - l2 * a1 * a3) / den, C(0.0), C(1.0)};
  const V v3{-(l1 * a2 * r + w1 * a1 * a3) / den,
             -(a3 * r - l1 * a1 * a2) / den, C(1.0), C(0.0)};
  const V v4{-(l2 * a3 * r - w1 * a1 * a2) / den,
             (a2 * r + l2 * a1 * a3) / den, C(0.0), C(1.0)};
  return {EigenPair{t1, v1, 2}, EigenPair{t1, v2, 2}, EigenPair{t3, v3, 2},
          EigenPair{t3, v4, 2}};
}

}  // namespace gq3
