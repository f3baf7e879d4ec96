#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "gq3/matrix.hpp"
#include "gq3/quaternion.hpp"

namespace gq3 {

/// Left fundamental matrix M(p): mul(p, q) = M(p) * (b0, b1, b2, b3)^T.
Mat4 left_matrix(const GQuat& p);

/// Right fundamental matrix N(p): mul(q, p) = N(p) * (b0, b1, b2, b3)^T.
Mat4 right_matrix(const GQuat& p);

/// E0..E3, the left matrices of the basis elements 1, e1, e2, e3.
std::array<Mat4, 4> base_matrices(const ParamTriple& params);

/// Determinant by Gaussian elimination with partial pivoting.
double det4(const Mat4& m);

/// Coefficients of (t^2 - 2 a0 t + N_p)^2, lowest degree first.
struct CharPoly {
  std::array<double, 5> coefficients{};

  /// Evaluates the squared quadratic directly, not the expanded coefficients.
  std::complex<double> operator()(std::complex<double> t) const;
  /// Horner evaluation of the expanded coefficients.
  std::complex<double> evaluate_expanded(std::complex<double> t) const;

 private:
  friend CharPoly char_poly(const GQuat& p);
  double a0_ = 0.0;
  double norm_ = 0.0;
};

CharPoly char_poly(const GQuat& p);

struct EigenPair {
  std::complex<double> value;
  std::optional<std::array<std::complex<double>, 4>> vector;
  int multiplicity = 1;
};

/// The two distinct eigenvalues a0 + sqrt(-D) and a0 - sqrt(-D), each of
/// algebraic multiplicity 2. sqrt is the principal branch, so for D > 0 the
/// pair is a0 +- i sqrt(D).
std::array<EigenPair, 2> eigenvalues(const GQuat& p);

/// The four closed-form eigenvectors, two per eigenvalue, in the order
/// (t1, v1), (t1, v2), (t3, v3), (t3, v4). Requires l1 a2^2 + l2 a3^2 != 0
/// and throws Error{DegenerateAxis} otherwise.
std::array<EigenPair, 4> eigenvectors(const GQuat& p);

}  // namespace gq3
