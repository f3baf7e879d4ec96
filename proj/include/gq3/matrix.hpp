#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace gq3 {

/// Dense row-major N x N real matrix.
template <std::size_t N>
struct SquareMatrix {
  std::array<double, N * N> a{};

  static constexpr std::size_t size() noexcept { return N; }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }
  static SquareMatrix zero() { return {}; }

  double& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

  SquareMatrix transposed() const {
    SquareMatrix t;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  double trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += (*this)(i, i);
    return s;
  }

  std::array<double, N> apply(const std::array<double, N>& v) const {
    std::array<double, N> out{};
    for (std::size_t r = 0; r < N; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < N; ++c) s += (*this)(r, c) * v[c];
      out[r] = s;
    }
    return out;
  }

  friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.a[i] = x.a[i] + y.a[i];
    return m;
  }
  friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.a[i] = x.a[i] - y.a[i];
    return m;
  }
  friend SquareMatrix operator*(double s, const SquareMatrix& x) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.a[i] = s * x.a[i];
    return m;
  }
  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) {
        double s = 0.0;
        for (std::size_t k = 0; k < N; ++k) s += x(r, k) * y(k, c);
        m(r, c) = s;
      }
    return m;
  }
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

using Mat3 = SquareMatrix<3>;
using Mat4 = SquareMatrix<4>;

/// Largest absolute entry of x - y.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& x, const SquareMatrix<N>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < N * N; ++i)
    d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

template <std::size_t N>
double max_abs(const SquareMatrix<N>& x) {
  double d = 0.0;
  for (double v : x.a) d = std::max(d, std::abs(v));
  return d;
}

}  // namespace gq3
