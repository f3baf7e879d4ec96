#include "gq3/oracle.hpp"

#include <cmath>
#include <utility>

#include "gq3/error.hpp"

namespace gq3::oracle {

TableEntry table_lookup(const ParamTriple& k, int row, int col) {
  const double l1 = k.lambda1(), l2 = k.lambda2(), l3 = k.lambda3();
  const TableEntry table[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-l1 * l2, 0}, {l1, 3}, {-l2, 2}},
      {{1, 2}, {-l1, 3}, {-l1 * l3, 0}, {l3, 1}},
      {{1, 3}, {l2, 2}, {-l3, 1}, {-l2 * l3, 0}},
  };
  return table[row][col];
}

BasisExpansion BasisExpansion::from_quat(const GQuat& p) {
  BasisExpansion e(p.params());
  for (int i = 0; i < 4; ++i) e.add_term(p[static_cast<std::size_t>(i)], {i});
  return e;
}

void BasisExpansion::add_term(double coefficient, std::vector<int> word) {
  terms_.push_back({coefficient, std::move(word)});
}

BasisExpansion BasisExpansion::times(const BasisExpansion& other) const {
  require_same(params_, other.params_);
  BasisExpansion out(params_);
  for (const Term& a : terms_)
    for (const Term& b : other.terms_) {
      std::vector<int> word = a.word;
      word.insert(word.end(), b.word.begin(), b.word.end());
      out.add_term(a.coefficient * b.coefficient, std::move(word));
    }
  return out;
}

GQuat BasisExpansion::reduce() const {
  std::array<double, 4> c{};
  for (const Term& t : terms_) {
    double coefficient = t.coefficient;
    std::vector<int> word = t.word;
    while (word.size() > 1) {
      const TableEntry e = table_lookup(params_, word[0], word[1]);
      coefficient *= e.coefficient;
      word.erase(word.begin());
      word[0] = e.index;
    }
    c[word.empty() ? 0 : static_cast<std::size_t>(word[0])] += coefficient;
  }
  return {params_, c};
}

GQuat mul_by_table(const GQuat& p, const GQuat& q) {
  return BasisExpansion::from_quat(p).times(BasisExpansion::from_quat(q))
      .reduce();
}

namespace {

GQuat table_conjugate(const GQuat& p) {
  return {p.params(), p[0], -p[1], -p[2], -p[3]};
}

GQuat table_inverse(const GQuat& p) {
  const double n = mul_by_table(p, table_conjugate(p))[0];
  double sq = 0.0;
  for (double v : p.components()) sq += v * v;
  if (std::abs(n) <= 1e-12 * (1.0 + sq * std::max(1.0, p.params().max_weight())))
    throw Error(ErrorCode::ZeroNorm, "null quaternion has no inverse");
  const GQuat c = table_conjugate(p);
  return {p.params(), c[0] / n, c[1] / n, c[2] / n, c[3] / n};
}

}  // namespace

GQuat pow_by_repetition(const GQuat& p, int n) {
  const GQuat base = n < 0 ? table_inverse(p) : p;
  GQuat acc = GQuat::one(p.params());
  const int count = n < 0 ? -n : n;
  for (int i = 0; i < count; ++i) acc = mul_by_table(acc, base);
  return acc;
}

Mat3 conjugation_columns(const GQuat& p) {
  const GQuat inv = table_inverse(p);
  Mat3 m;
  for (std::size_t j = 0; j < 3; ++j) {
    const GQuat image =
        mul_by_table(mul_by_table(p, GQuat::basis(p.params(), j + 1)), inv);
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = image[i + 1];
  }
  return m;
}

double conjugation_scalar_residual(const GQuat& p) {
  const GQuat inv = table_inverse(p);
  double worst = 0.0;
  for (std::size_t j = 1; j < 4; ++j) {
    const GQuat image =
        mul_by_table(mul_by_table(p, GQuat::basis(p.params(), j)), inv);
    worst = std::max(worst, std::abs(image[0]));
  }
  return worst;
}

namespace {

double det3(const std::array<double, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) -
         m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

}  // namespace

double det_cofactor(const Mat4& m) {
  double det = 0.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::array<double, 9> minor{};
    std::size_t k = 0;
    for (std::size_t r = 1; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        if (c != col) minor[k++] = m(r, c);
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    det += sign * m(0, col) * det3(minor);
  }
  return det;
}

Mat4 exp_taylor(const Mat4& a, double t, int order) {
  Mat4 sum = Mat4::identity();
  Mat4 term = Mat4::identity();
  const Mat4 ta = t * a;
  for (int k = 1; k <= order; ++k) {
    term = (1.0 / k) * (term * ta);
    sum = sum + term;
  }
  return sum;
}

Mat3 central_difference(const std::function<Mat3(double)>& f, double x,
                        double h) {
  return (1.0 / (2.0 * h)) * (f(x + h) - f(x - h));
}

std::array<double, 5> char_poly_by_sampling(const Mat4& m,
                                            const std::array<double, 5>& ts) {
  // Vandermonde system solved by Gaussian elimination.
  double a[5][6];
  for (std::size_t i = 0; i < 5; ++i) {
    double power = 1.0;
    for (std::size_t j = 0; j < 5; ++j) {
      a[i][j] = power;
      power *= ts[i];
    }
    a[i][5] = det_cofactor(m - ts[i] * Mat4::identity());
  }
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 5; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    for (std::size_t c = 0; c < 6; ++c) std::swap(a[col][c], a[pivot][c]);
    for (std::size_t r = 0; r < 5; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < 6; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::array<double, 5> coefficients{};
  for (std::size_t i = 0; i < 5; ++i) coefficients[i] = a[i][5] / a[i][i];
  return coefficients;
}

}  // namespace gq3::oracle
