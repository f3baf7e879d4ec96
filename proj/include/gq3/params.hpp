#pragma once

#include <cstring>
#include <string_view>

namespace gq3 {

/// The parameters (lambda1, lambda2, lambda3) that select one generalized
/// quaternion algebra:
///   e1^2 = -l1*l2,  e2^2 = -l1*l3,  e3^2 = -l2*l3,  e1e2e3 = -l1*l2*l3.
/// Zero and negative values are legal and select the semi and split families.
class ParamTriple {
 public:
  /// Throws Error{InvalidArgument} if any entry is not finite.
  ParamTriple(double lambda1, double lambda2, double lambda3);

  double lambda1() const noexcept { return l1_; }
  double lambda2() const noexcept { return l2_; }
  double lambda3() const noexcept { return l3_; }

  // Weights of the quadratic form on the vector part.
  double w1() const noexcept { return l1_ * l2_; }
  double w2() const noexcept { return l1_ * l3_; }
  double w3() const noexcept { return l2_ * l3_; }

  /// max(|l1 l2|, |l1 l3|, |l2 l3|)
  double max_weight() const noexcept;

  bool all_positive() const noexcept { return l1_ > 0 && l2_ > 0 && l3_ > 0; }

  // Bitwise comparison; -0.0 and 0.0 are different algebras as far as
  // operand checking is concerned.
  friend bool operator==(const ParamTriple& a, const ParamTriple& b) noexcept {
    return std::memcmp(&a.l1_, &b.l1_, sizeof(double)) == 0 &&
           std::memcmp(&a.l2_, &b.l2_, sizeof(double)) == 0 &&
           std::memcmp(&a.l3_, &b.l3_, sizeof(double)) == 0;
  }

 private:
  double l1_;
  double l2_;
  double l3_;
};

enum class Family { TwoParam, Split, Hamilton, Semi, SplitSemi, Quarter };

/// Parameter assignment for a named family. `lambda` and `mu` are only read
/// for Family::TwoParam, which yields (1, lambda, mu).
ParamTriple family(Family name, double lambda = 1.0, double mu = 1.0);

/// Parses "hamilton", "split", "semi", "split-semi", "quarter" or
/// "2param:<lambda>,<mu>". Throws Error{InvalidArgument} on anything else.
ParamTriple family_from_name(std::string_view name);

/// Throws Error{ParamMismatch} unless `a == b`.
void require_same(const ParamTriple& a, const ParamTriple& b);

/// Tolerances that callers may override. Defaults are the library's
/// documented thresholds.
struct Tolerance {
  /// |N_p - 1| bound for unit quaternions and |f(v,v) - 1| for unit vectors.
  double unit = 1e-10;
  /// Relative bound on |2pi/theta - round(2pi/theta)| when detecting a
  /// power period.
  double period = 1e-9;
};

}  // namespace gq3
