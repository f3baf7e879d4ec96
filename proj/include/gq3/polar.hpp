#pragma once

#include <optional>
#include <vector>

#include "gq3/matrix.hpp"
#include "gq3/quaternion.hpp"

namespace gq3 {

/// p = modulus * (cos(theta) + axis * sin(theta)) with theta in [0, pi].
///
/// `axis` is empty for pure scalars, where theta is 0 or pi and every unit
/// axis reproduces p. Otherwise f(axis, axis) = 1.
struct PolarForm {
  double modulus = 1.0;
  double theta = 0.0;
  std::optional<GVec3> axis;

  GQuat recompose(const ParamTriple& params) const;
};

/// Polar decomposition of an elliptic quaternion (D > 0 and N_p > 0), or of a
/// nonzero scalar (axis undefined).
/// Throws Error{NonElliptic} when the vector part is nonzero and D <= 0, and
/// Error{ZeroNorm} when N_p <= 0.
PolarForm to_polar(const GQuat& p);

/// modulus^n (cos n theta + axis sin n theta) for any integer n.
GQuat demoivre_pow(const GQuat& p, int n);

/// The polar-form matrix of p with theta replaced by n theta. p must be a unit
/// elliptic quaternion; throws Error{NonUnit} otherwise.
Mat4 matrix_pow(const GQuat& p, int n, const Tolerance& tol = {});

/// cos(theta) + v sin(theta) for f(v, v) = 1; Error{NotUnitVector} otherwise.
GQuat euler_exp(const GVec3& v, double theta, const Tolerance& tol = {});
/// cos(theta) I4 + sin(theta) P, P the left matrix of the pure unit vector.
Mat4 euler_exp_matrix(const GVec3& v, double theta, const Tolerance& tol = {});

/// The n matrices X with X^n = M(p): polar-form matrices at angles
/// (theta + 2 k pi) / n, k = 0..n-1, sharing the axis of p.
struct RootSet {
  int degree = 0;
  std::vector<Mat4> roots;
};

/// Requires a unit elliptic p with a defined axis and n >= 1.
RootSet matrix_roots(const GQuat& p, int n, const Tolerance& tol = {});

/// m = 2 pi / theta when that is an integer >= 2 (within tol.period relative);
/// empty otherwise. p must be unit elliptic.
std::optional<int> power_period(const GQuat& p, const Tolerance& tol = {});

struct PowerRelation {
  /// (sqrt N_p)^(n - s) p^s
  GQuat scaled;
  /// p^n computed directly by De Moivre
  GQuat direct;
  int period = 0;
};

/// Evaluates p^n = (sqrt N_p)^(n-s) p^s for n = s (mod m), where m is the
/// power period of p / sqrt(N_p).
/// Throws Error{NoPeriod} if no period exists and Error{CongruenceViolation}
/// if n and s are not congruent modulo it.
PowerRelation scaled_power_relation(const GQuat& p, int n, int s,
                                    const Tolerance& tol = {});

/// Polar-form matrix cos(a) I4 + sin(a) P(axis).
Mat4 polar_matrix(const GVec3& axis, double angle);

}  // namespace gq3
