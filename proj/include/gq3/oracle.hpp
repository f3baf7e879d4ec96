#pragma once

// Brute-force reference paths used by the test suites to check the
// closed forms. These are slow on purpose and never call the closed-form
// product, the printed matrices or the polar formulas.

#include <array>
#include <functional>
#include <vector>

#include "gq3/matrix.hpp"
#include "gq3/quaternion.hpp"

namespace gq3::oracle {

/// Sum of coefficient * (basis word) terms, each word a product of basis
/// indices 0..3 (0 is the unit).
class BasisExpansion {
 public:
  struct Term {
    double coefficient;
    std::vector<int> word;
  };

  explicit BasisExpansion(ParamTriple params) : params_(params) {}

  /// Expands a quaternion as four length-1 words.
  static BasisExpansion from_quat(const GQuat& p);

  void add_term(double coefficient, std::vector<int> word);

  /// Term-by-term product; word lengths add up.
  BasisExpansion times(const BasisExpansion& other) const;

  /// Rewrites every word to length <= 1 by repeatedly replacing its first two
  /// letters with the table entry, then collects like terms.
  GQuat reduce() const;

  const std::vector<Term>& terms() const noexcept { return terms_; }

 private:
  ParamTriple params_;
  std::vector<Term> terms_;
};

/// One entry of the multiplication table: e_row * e_col = coefficient * e_index.
struct TableEntry {
  double coefficient;
  int index;
};
TableEntry table_lookup(const ParamTriple& params, int row, int col);

/// Product through the 16 basis-word products and the table.
GQuat mul_by_table(const GQuat& p, const GQuat& q);

/// Left-associated n-fold product (inverse chain for n < 0).
/// Throws Error{ZeroNorm} for negative n on a null quaternion.
GQuat pow_by_repetition(const GQuat& p, int n);

/// Columns are the vector parts of p e_j p^-1, computed by table products.
/// Throws Error{ZeroNorm} for null p.
Mat3 conjugation_columns(const GQuat& p);
/// Largest |scalar part| among p e_j p^-1, j = 1..3.
double conjugation_scalar_residual(const GQuat& p);

/// Laplace expansion along the first row.
double det_cofactor(const Mat4& m);

/// sum_{k=0}^{order} (t A)^k / k!
Mat4 exp_taylor(const Mat4& a, double t, int order);

/// Central difference (f(x + h) - f(x - h)) / 2h, entrywise.
Mat3 central_difference(const std::function<Mat3(double)>& f, double x,
                        double h);

/// Coefficients (lowest degree first) of the unique degree-4 polynomial
/// through (t_i, det(M - t_i I)) for five sample points.
std::array<double, 5> char_poly_by_sampling(const Mat4& m,
                                            const std::array<double, 5>& ts);

}  // namespace gq3::oracle
