// zermelo - small dense linear algebra for 4x4 metric work
//
// Everything here is fixed-size and value-semantic. The templated routines
// run over any commutative ring with division by units (double or Jet); the
// metrics handled by this library have SPD values, so Gaussian elimination
// without pivoting is safe (leading minors stay positive).
#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "zermelo/errors.hpp"

namespace zermelo {

using Vec4 = std::array<double, 4>;

struct Mat4 {
  std::array<double, 16> e{};

  double& operator()(int i, int j) { return e[static_cast<std::size_t>(4 * i + j)]; }
  double operator()(int i, int j) const { return e[static_cast<std::size_t>(4 * i + j)]; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

inline Mat4 operator*(double s, const Mat4& a) {
  Mat4 r;
  for (int k = 0; k < 16; ++k) r.e[k] = s * a.e[k];
  return r;
}

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

inline Vec4 operator*(const Mat4& a, const Vec4& x) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += a(i, j) * x[j];
  return r;
}

inline Mat4 transpose(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = a(j, i);
  return r;
}

inline Mat4 outer(const Vec4& u, const Vec4& v) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = u[i] * v[j];
  return r;
}

inline double dot(const Vec4& u, const Vec4& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

inline double norm_sq(const Vec4& u) { return dot(u, u); }

inline double norm(const Vec4& u) { return std::sqrt(dot(u, u)); }

// y^T A x
inline double quadratic_form(const Mat4& a, const Vec4& y, const Vec4& x) {
  return dot(y, a * x);
}

// max |a_ij|
inline double inf_norm(const Mat4& a) {
  double m = 0.0;
  for (double v : a.e) m = std::max(m, std::abs(v));
  return m;
}

inline double inf_norm(const Vec4& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double frobenius_norm(const Mat4& a) {
  double s = 0.0;
  for (double v : a.e) s += v * v;
  return std::sqrt(s);
}

// <A, B>_F
inline double frobenius_inner(const Mat4& a, const Mat4& b) {
  double s = 0.0;
  for (int k = 0; k < 16; ++k) s += a.e[k] * b.e[k];
  return s;
}

// Cholesky A = L L^T. Returns false if a pivot is not strictly positive.
inline bool cholesky(const Mat4& a, Mat4& l) {
  l = Mat4{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (!(s > 0.0)) return false;
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return true;
}

inline bool is_positive_definite(const Mat4& a) {
  Mat4 l;
  return cholesky(a, l);
}

// Solve A x = b for SPD A via Cholesky; throws NumericalError on failure.
inline Vec4 solve_spd(const Mat4& a, const Vec4& b) {
  Mat4 l;
  if (!cholesky(a, l)) throw NumericalError("solve_spd: matrix is not positive definite");
  Vec4 y{};
  for (int i = 0; i < 4; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= l(i, k) * y[k];
    y[i] = s / l(i, i);
  }
  Vec4 x{};
  for (int i = 3; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < 4; ++k) s -= l(k, i) * x[k];
    x[i] = s / l(i, i);
  }
  return x;
}

inline Mat4 inverse_spd(const Mat4& a) {
  Mat4 inv;
  for (int j = 0; j < 4; ++j) {
    Vec4 e{};
    e[j] = 1.0;
    Vec4 col = solve_spd(a, e);
    for (int i = 0; i < 4; ++i) inv(i, j) = col[i];
  }
  return inv;
}

// --- templated fixed-size routines over double or Jet ---------------------

template <class T, std::size_t N>
using SquareArray = std::array<std::array<T, N>, N>;

// Gaussian elimination without pivoting; valid whenever every leading minor
// is invertible (constant terms SPD in the jet case).
template <class T, std::size_t N>
std::array<T, N> solve_linear(SquareArray<T, N> a, std::array<T, N> b) {
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t i = k + 1; i < N; ++i) {
      T factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < N; ++j) a[i][j] -= factor * a[k][j];
      b[i] -= factor * b[k];
    }
  }
  std::array<T, N> x = b;
  for (std::size_t i = N; i-- > 0;) {
    for (std::size_t j = i + 1; j < N; ++j) x[i] -= a[i][j] * x[j];
    x[i] = x[i] / a[i][i];
  }
  return x;
}

// Inverse by columnwise elimination; same pivot caveat as solve_linear.
template <class T, std::size_t N>
SquareArray<T, N> invert(const SquareArray<T, N>& a, const T& zero, const T& one) {
  SquareArray<T, N> inv;
  for (std::size_t j = 0; j < N; ++j) {
    std::array<T, N> e;
    for (std::size_t i = 0; i < N; ++i) e[i] = (i == j) ? one : zero;
    std::array<T, N> col = solve_linear<T, N>(a, e);
    for (std::size_t i = 0; i < N; ++i) inv[i][j] = col[i];
  }
  return inv;
}

}  // namespace zermelo
