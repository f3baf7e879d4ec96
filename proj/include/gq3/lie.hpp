#pragma once

#include "gq3/matrix.hpp"
#include "gq3/quaternion.hpp"

namespace gq3 {

/// Lie bracket from the structure constants
///   [e1, e2] = 2 l1 e3,  [e2, e3] = 2 l3 e1,  [e3, e1] = 2 l2 e2.
GVec3 bracket(const GVec3& x, const GVec3& y);

/// diag(l1 l2, l1 l3, l2 l3)
Mat3 metric_eps(const ParamTriple& params);

/// Matrix of q -> p q conj(p) on Im(K), column j holding p e_j conj(p).
/// For unit p this is the adjoint q -> p q p^-1. In general
/// Ad^T eps Ad = N_p^2 eps and det Ad = N_p^3.
/// Throws Error{ZeroNorm} for null p.
Mat3 adjoint_group(const GQuat& p);

/// The matrix S with S v = s ^ v:
///   [     0  -l3 s3   l3 s2 ]
///   [  l2 s3      0  -l2 s1 ]
///   [ -l1 s2   l1 s1      0 ]
Mat3 skew_of_axis(const GVec3& s);

/// I + sin(theta) S + (1 - cos(theta)) S^2 for the unit axis s. All lambdas
/// must be positive (Error{NotPositiveFamily}) and f(s, s) = 1
/// (Error{NotUnitVector}).
Mat3 adjoint_rodrigues(const GVec3& axis, double theta,
                       const Tolerance& tol = {});

/// ad_X, the matrix of Y -> [X, Y].
Mat3 ad_matrix(const GVec3& x);

/// tr(ad_X ad_Y)
double killing_form(const GVec3& x, const GVec3& y);

/// Matrix of the Killing form over (e1, e2, e3), equal to -8 eps.
Mat3 killing_matrix(const ParamTriple& params);

/// True iff every lambda is positive.
bool is_compact(const ParamTriple& params);

}  // namespace gq3
