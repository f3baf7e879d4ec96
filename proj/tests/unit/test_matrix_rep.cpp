#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "generators.hpp"
#include "gq3/error.hpp"
#include "gq3/matrix_rep.hpp"
#include "gq3/oracle.hpp"

using gq3::GQuat;
using gq3::Mat4;
using gq3::ParamTriple;
using gq3test::Rng;
using C = std::complex<double>;

namespace {

double residual(const Mat4& m, C t, const std::array<C, 4>& v) {
  double worst = 0.0, size = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    C s = 0.0;
    for (std::size_t c = 0; c < 4; ++c) s += m(r, c) * v[c];
    worst = std::max(worst, std::abs(s - t * v[r]));
    size = std::max(size, std::abs(v[r]));
  }
  return worst / size;
}

}  // namespace

TEST(LeftMatrix, IdentityAndBasisPattern) {
  const ParamTriple k(2, 3, 5);
  EXPECT_EQ(gq3::left_matrix(GQuat::one(k)), Mat4::identity());
  const Mat4 e1 = gq3::left_matrix(GQuat::basis(k, 1));
  const Mat4 expected{{0, -6, 0, 0,  //
                       1, 0, 0, 0,   //
                       0, 0, 0, -3,  //
                       0, 0, 2, 0}};
  EXPECT_EQ(e1, expected);
}

TEST(LeftMatrix, RealizesLeftMultiplication) {
  Rng rng(31);
  for (const auto& [name, k] : gq3test::all_families(rng)) {
    for (int i = 0; i < 200; ++i) {
      const GQuat p = gq3test::random_quat(rng, k), q = gq3test::random_quat(rng, k);
      const auto v = gq3::left_matrix(p).apply(q.components());
      EXPECT_LE(gq3test::rel_diff(GQuat(k, v), p * q), 1e-12) << name;
      const auto w = gq3::right_matrix(p).apply(q.components());
      EXPECT_LE(gq3test::rel_diff(GQuat(k, w), q * p), 1e-12) << name;
    }
  }
}

TEST(RightMatrix, HamiltonE1MatchesBasisProducts) {
  const ParamTriple h(1, 1, 1);
  const GQuat e1 = GQuat::basis(h, 1);
  const Mat4 n = gq3::right_matrix(e1);
  for (std::size_t j = 0; j < 4; ++j) {
    const GQuat col = GQuat::basis(h, j) * e1;
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(n(i, j), col[i]);
  }
  EXPECT_EQ(gq3::right_matrix(GQuat::one(h)), Mat4::identity());
}

TEST(Representation, Homomorphism) {
  Rng rng(32);
  for (const auto& [name, k] : gq3test::all_families(rng)) {
    for (int i = 0; i < 200; ++i) {
      const GQuat p = gq3test::random_quat(rng, k), q = gq3test::random_quat(rng, k);
      const Mat4 mp = gq3::left_matrix(p), mq = gq3::left_matrix(q);
      EXPECT_LE(gq3test::rel_diff(gq3::left_matrix(p * q), mp * mq), 1e-12) << name;
      EXPECT_LE(gq3test::rel_diff(gq3::right_matrix(p * q),
                                  gq3::right_matrix(q) * gq3::right_matrix(p)),
                1e-12)
          << name;
      EXPECT_LE(gq3test::rel_diff(gq3::left_matrix(p + q), mp + mq), 1e-14);
      // left and right multiplications commute
      const Mat4 np = gq3::right_matrix(p);
      EXPECT_LE(gq3test::rel_diff(np * mq, mq * np), 1e-12) << name;
    }
  }
}

TEST(BaseMatrices, ProductList) {
  for (const ParamTriple& k :
       {ParamTriple(1, 1, 1), ParamTriple(1, 1, -1), ParamTriple(1, 0, 0),
        ParamTriple(2, 3, 5), ParamTriple(1, -1, 0), ParamTriple(-2, 3, 7)}) {
    const auto [E0, E1, E2, E3] = gq3::base_matrices(k);
    const Mat4 I = Mat4::identity();
    const double l1 = k.lambda1(), l2 = k.lambda2(), l3 = k.lambda3();
    EXPECT_EQ(E0, I);
    EXPECT_EQ(E1 * E1, -l1 * l2 * I);
    EXPECT_EQ(E2 * E2, -l1 * l3 * I);
    EXPECT_EQ(E3 * E3, -l2 * l3 * I);
    EXPECT_EQ(E1 * E2, l1 * E3);
    EXPECT_EQ(E2 * E1, -l1 * E3);
    EXPECT_EQ(E1 * E3, -l2 * E2);
    EXPECT_EQ(E3 * E1, l2 * E2);
    EXPECT_EQ(E2 * E3, l3 * E1);
    EXPECT_EQ(E3 * E2, -l3 * E1);
    EXPECT_EQ(E1 * E2 * E3, -l1 * l2 * l3 * I);
    EXPECT_EQ(E3 * E2 * E1, l1 * l2 * l3 * I);
  }
}

TEST(Det4, Basics) {
  EXPECT_EQ(gq3::det4(Mat4::identity()), 1);
  EXPECT_DOUBLE_EQ(gq3::det4(gq3::left_matrix(GQuat::basis({1, 1, 1}, 1))), 1);
  const Mat4 singular{{1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1, 5, 5, 5, 5}};
  EXPECT_EQ(gq3::oracle::det_cofactor(singular), 0);
  EXPECT_NEAR(gq3::det4(singular), 0, 1e-12);
}

TEST(Det4, MatchesCofactorAndNormSquared) {
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    Mat4 m;
    for (double& v : m.a) v = rng.uniform(-3, 3);
    const double ref = gq3::oracle::det_cofactor(m);
    EXPECT_LE(gq3test::rel_err(gq3::det4(m), ref), 1e-11);
  }
  for (const auto& [name, k] : gq3test::all_families(rng)) {
    for (int i = 0; i < 200; ++i) {
      const GQuat p = gq3test::random_quat(rng, k);
      const double n = gq3::norm(p);
      EXPECT_LE(gq3test::rel_err(gq3::det4(gq3::left_matrix(p)), n * n), 1e-9) << name;
      EXPECT_LE(gq3test::rel_err(gq3::det4(gq3::right_matrix(p)), n * n), 1e-9) << name;
    }
  }
}

TEST(CharPoly, PerfectSquareMatchingSampledDeterminant) {
  Rng rng(34);
  for (const auto& [name, k] : gq3test::all_families(rng)) {
    for (int i = 0; i < 100; ++i) {
      const GQuat p = gq3test::random_quat(rng, k);
      const gq3::CharPoly poly = gq3::char_poly(p);
      EXPECT_EQ(poly.coefficients[4], 1.0);
      const auto sampled = gq3::oracle::char_poly_by_sampling(
          gq3::left_matrix(p), {-2.0, -1.0, 0.0, 1.0, 2.0});
      const double scale = std::max(1.0, std::abs(poly.coefficients[0]));
      for (std::size_t c = 0; c < 5; ++c)
        EXPECT_LE(std::abs(sampled[c] - poly.coefficients[c]), 1e-9 * scale)
            << name << " coefficient " << c;
      for (double t : {-1.5, 0.25, 3.0}) {
        EXPECT_LE(std::abs(poly(t) - poly.evaluate_expanded(t)),
                  1e-9 * std::max(1.0, std::abs(poly(t))));
      }
    }
  }
}

TEST(Eigenvalues, ConjugatePairsWithMultiplicityTwo) {
  Rng rng(35);
  for (const auto& [name, k] : gq3test::all_families(rng)) {
    for (int i = 0; i < 200; ++i) {
      const GQuat p = gq3test::random_quat(rng, k);
      const auto [t1, t3] = gq3::eigenvalues(p);
      EXPECT_EQ(t1.multiplicity, 2);
      EXPECT_EQ(t3.multiplicity, 2);
      EXPECT_FALSE(t1.vector.has_value());
      EXPECT_LE(std::abs(t1.value + t3.value - 2.0 * p[0]), 1e-12);
      const double n = gq3::norm(p);
      EXPECT_LE(std::abs(t1.value * t3.value - n), 1e-12 * std::max(1.0, std::abs(n)));
      const gq3::CharPoly poly = gq3::char_poly(p);
      EXPECT_LE(std::abs(poly.evaluate_expanded(t1.value)), 1e-8) << name;
      EXPECT_LE(std::abs(poly.evaluate_expanded(t3.value)), 1e-8) << name;
      if (gq3::axis_discriminant(p) > 0) {
        EXPECT_DOUBLE_EQ(t1.value.real(), t3.value.real());
        EXPECT_DOUBLE_EQ(t1.value.imag(), -t3.value.imag());
      }
    }
  }
}

TEST(Eigenvectors, ResidualsVanish) {
  Rng rng(36);
  for (const auto& [name, k] : gq3test::all_families(rng)) {
    for (int i = 0; i < 200; ++i) {
      const GQuat p = gq3test::random_quat(rng, k);
      const double den = k.lambda1() * p[2] * p[2] + k.lambda2() * p[3] * p[3];
      if (std::abs(den) < 1e-6) continue;
      const Mat4 m = gq3::left_matrix(p);
      for (const gq3::EigenPair& e : gq3::eigenvectors(p)) {
        ASSERT_TRUE(e.vector.has_value());
        EXPECT_LE(residual(m, e.value, *e.vector), 1e-8) << name;
      }
    }
  }
}

TEST(Eigenvectors, DegenerateAxis) {
  for (const GQuat& p : {GQuat({1, 1, 1}, 1, 2, 0, 0), GQuat({2, 3, 5}, 0, 0, 0, 0),
                         GQuat({1, -1, 0}, 1, 0.5, 1, 1),
                         GQuat({1, 0, 0}, 1, 1, 0, 1)}) {
    try {
      gq3::eigenvectors(p);
      ADD_FAILURE() << "expected DegenerateAxis";
    } catch (const gq3::Error& err) {
      EXPECT_EQ(err.code(), gq3::ErrorCode::DegenerateAxis);
    }
  }
}
