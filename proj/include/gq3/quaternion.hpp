#pragma once

#include <array>
#include <cstddef>

#include "gq3/params.hpp"

namespace gq3 {

class GQuat;

/// Pure generalized quaternion a1 e1 + a2 e2 + a3 e3, i.e. an element of the
/// Lie algebra Im(K).
class GVec3 {
 public:
  GVec3(const ParamTriple& params, double a1, double a2, double a3);
  GVec3(const ParamTriple& params, const std::array<double, 3>& c);

  static GVec3 zero(const ParamTriple& params) { return {params, 0, 0, 0}; }
  /// Basis vector e_{index+1}, index in [0, 3).
  static GVec3 basis(const ParamTriple& params, std::size_t index);

  const ParamTriple& params() const noexcept { return params_; }
  const std::array<double, 3>& components() const noexcept { return c_; }
  double operator[](std::size_t i) const { return c_[i]; }

  GQuat to_quat() const;

  friend GVec3 operator+(const GVec3& u, const GVec3& v);
  friend GVec3 operator-(const GVec3& u, const GVec3& v);
  friend GVec3 operator*(double s, const GVec3& v);
  GVec3 operator-() const { return {params_, -c_[0], -c_[1], -c_[2]}; }

  friend bool operator==(const GVec3& a, const GVec3& b) noexcept {
    return a.params_ == b.params_ && a.c_ == b.c_;
  }

 private:
  ParamTriple params_;
  std::array<double, 3> c_;
};

/// Generalized quaternion a0 + a1 e1 + a2 e2 + a3 e3 over the algebra given by
/// its ParamTriple. Binary operations require bitwise-equal triples and throw
/// Error{ParamMismatch} otherwise.
class GQuat {
 public:
  GQuat(const ParamTriple& params, double a0, double a1, double a2, double a3);
  GQuat(const ParamTriple& params, const std::array<double, 4>& c);

  static GQuat scalar(const ParamTriple& params, double s) {
    return {params, s, 0, 0, 0};
  }
  static GQuat one(const ParamTriple& params) { return scalar(params, 1.0); }
  /// Basis element e_index, index in [0, 4) with e_0 = 1.
  static GQuat basis(const ParamTriple& params, std::size_t index);

  const ParamTriple& params() const noexcept { return params_; }
  const std::array<double, 4>& components() const noexcept { return c_; }
  double operator[](std::size_t i) const { return c_[i]; }

  double scalar_part() const noexcept { return c_[0]; }
  GVec3 vector_part() const { return {params_, c_[1], c_[2], c_[3]}; }

  friend GQuat operator+(const GQuat& p, const GQuat& q);
  friend GQuat operator-(const GQuat& p, const GQuat& q);
  friend GQuat operator*(const GQuat& p, const GQuat& q);
  friend GQuat operator*(double s, const GQuat& p);
  GQuat operator-() const { return {params_, -c_[0], -c_[1], -c_[2], -c_[3]}; }

  friend bool operator==(const GQuat& a, const GQuat& b) noexcept {
    return a.params_ == b.params_ && a.c_ == b.c_;
  }

 private:
  ParamTriple params_;
  std::array<double, 4> c_;
};

GQuat add(const GQuat& p, const GQuat& q);
GQuat sub(const GQuat& p, const GQuat& q);
GQuat scale(double c, const GQuat& p);

/// Closed-form product
///   pq = (a0b0 - l1l2 a1b1 - l1l3 a2b2 - l2l3 a3b3)
///      + e1 (a0b1 + b0a1 + l3 (a2b3 - a3b2))
///      + e2 (a0b2 + b0a2 + l2 (a3b1 - a1b3))
///      + e3 (a0b3 + b0a3 + l1 (a1b2 - a2b1)).
GQuat mul(const GQuat& p, const GQuat& q);

GQuat conj(const GQuat& p);

/// a0^2 + l1l2 a1^2 + l1l3 a2^2 + l2l3 a3^2. Indefinite in general.
double norm(const GQuat& p);

/// Threshold below which |norm(p)| counts as zero:
/// 1e-12 * (1 + sum(a_i^2) * max(1, max|l_i l_j|)).
double zero_norm_threshold(const GQuat& p);

/// conj(p) / norm(p). Throws Error{ZeroNorm} for null quaternions.
GQuat inverse(const GQuat& p);

/// S_p S_q + f(V_p, V_q).
double scalar_product(const GQuat& p, const GQuat& q);

/// f(u, v) = l1l2 u1v1 + l1l3 u2v2 + l2l3 u3v3.
double bilinear_f(const GVec3& u, const GVec3& v);

/// lambda-weighted cross product: the formal determinant with first row
/// (l3 e1, l2 e2, l1 e3).
GVec3 wedge(const GVec3& u, const GVec3& v);

/// p ^ (q ^ r) and its expansion f(p,r) q - f(p,q) r.
GVec3 wedge_triple_left(const GVec3& p, const GVec3& q, const GVec3& r);
GVec3 wedge_triple_left_expanded(const GVec3& p, const GVec3& q,
                                 const GVec3& r);
/// (p ^ q) ^ r and its expansion f(p,r) q - f(q,r) p.
GVec3 wedge_triple_right(const GVec3& p, const GVec3& q, const GVec3& r);
GVec3 wedge_triple_right_expanded(const GVec3& p, const GVec3& q,
                                  const GVec3& r);

/// D = l1l2 a1^2 + l1l3 a2^2 + l2l3 a3^2, i.e. f(V_p, V_p).
double axis_discriminant(const GQuat& p);

}  // namespace gq3
