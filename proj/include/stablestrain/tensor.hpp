#pragma once

// Small fixed-size tensors. Mat3 is a general 3x3 row-major matrix; SymTensor3
// stores only six components so symmetry is structural.

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace stablestrain {

template <class T>
struct Vec3 {
  std::array<T, 3> v{};

  T& operator[](std::size_t i) { return v[i]; }
  const T& operator[](std::size_t i) const { return v[i]; }

  friend T dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
};

template <class T>
struct Mat3 {
  std::array<T, 9> a{};

  static Mat3 zero() {
    Mat3 m;
    m.a.fill(T(0));
    return m;
  }
  static Mat3 identity() {
    Mat3 m = zero();
    m(0, 0) = m(1, 1) = m(2, 2) = T(1);
    return m;
  }

  T& operator()(std::size_t i, std::size_t j) { return a[3 * i + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[3 * i + j]; }

  Mat3 transpose() const {
    Mat3 t;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  T trace() const { return a[0] + a[4] + a[8]; }

  T det() const {
    const Mat3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  friend Mat3 operator+(Mat3 x, const Mat3& y) {
    for (std::size_t k = 0; k < 9; ++k) x.a[k] += y.a[k];
    return x;
  }
  friend Mat3 operator-(Mat3 x, const Mat3& y) {
    for (std::size_t k = 0; k < 9; ++k) x.a[k] -= y.a[k];
    return x;
  }
  friend Mat3 operator*(const T& s, Mat3 x) {
    for (auto& v : x.a) v = s * v;
    return x;
  }
  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
    return r;
  }
  friend Vec3<T> operator*(const Mat3& x, const Vec3<T>& v) {
    Vec3<T> r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = x(i, 0) * v[0] + x(i, 1) * v[1] + x(i, 2) * v[2];
    return r;
  }
};

/// Symmetric 3x3 tensor, components ordered xx, yy, zz, xy, xz, yz.
template <class T>
struct SymTensor3 {
  std::array<T, 6> c{};

  static constexpr std::size_t index(std::size_t i, std::size_t j) {
    constexpr std::size_t map[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
    return map[i][j];
  }

  static SymTensor3 zero() {
    SymTensor3 s;
    s.c.fill(T(0));
    return s;
  }
  static SymTensor3 identity() {
    SymTensor3 s = zero();
    s.c[0] = s.c[1] = s.c[2] = T(1);
    return s;
  }
  static SymTensor3 diagonal(const T& x, const T& y, const T& z) {
    SymTensor3 s = zero();
    s.c[0] = x;
    s.c[1] = y;
    s.c[2] = z;
    return s;
  }
  /// ½(M + Mᵀ).
  static SymTensor3 symmetric_part(const Mat3<T>& m) {
    SymTensor3 s;
    for (std::size_t i = 0; i < 3; ++i) s.c[i] = m(i, i);
    s.c[3] = (m(0, 1) + m(1, 0)) / T(2);
    s.c[4] = (m(0, 2) + m(2, 0)) / T(2);
    s.c[5] = (m(1, 2) + m(2, 1)) / T(2);
    return s;
  }
  /// Outer product v vᵀ.
  static SymTensor3 outer(const Vec3<T>& v) {
    SymTensor3 s;
    s.c = {v[0] * v[0], v[1] * v[1], v[2] * v[2], v[0] * v[1], v[0] * v[2], v[1] * v[2]};
    return s;
  }

  T& operator()(std::size_t i, std::size_t j) { return c[index(i, j)]; }
  const T& operator()(std::size_t i, std::size_t j) const { return c[index(i, j)]; }

  Mat3<T> full() const {
    Mat3<T> m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  T trace() const { return c[0] + c[1] + c[2]; }

  T det() const {
    return c[0] * (c[1] * c[2] - c[5] * c[5]) - c[3] * (c[3] * c[2] - c[5] * c[4]) +
           c[4] * (c[3] * c[5] - c[1] * c[4]);
  }

  /// Adjugate (transposed cofactor matrix); A adj(A) = det(A) I.
  SymTensor3 adjugate() const {
    SymTensor3 r;
    r.c[0] = c[1] * c[2] - c[5] * c[5];
    r.c[1] = c[0] * c[2] - c[4] * c[4];
    r.c[2] = c[0] * c[1] - c[3] * c[3];
    r.c[3] = c[4] * c[5] - c[3] * c[2];
    r.c[4] = c[3] * c[5] - c[4] * c[1];
    r.c[5] = c[3] * c[4] - c[0] * c[5];
    return r;
  }

  friend SymTensor3 operator+(SymTensor3 x, const SymTensor3& y) {
    for (std::size_t k = 0; k < 6; ++k) x.c[k] += y.c[k];
    return x;
  }
  friend SymTensor3 operator-(SymTensor3 x, const SymTensor3& y) {
    for (std::size_t k = 0; k < 6; ++k) x.c[k] -= y.c[k];
    return x;
  }
  friend SymTensor3 operator-(SymTensor3 x) {
    for (auto& v : x.c) v = -v;
    return x;
  }
  friend SymTensor3 operator*(const T& s, SymTensor3 x) {
    for (auto& v : x.c) v = s * v;
    return x;
  }
  SymTensor3& operator+=(const SymTensor3& y) { return *this = *this + y; }

  /// A : B (full double contraction, off-diagonals counted twice).
  friend T ddot(const SymTensor3& x, const SymTensor3& y) {
    return x.c[0] * y.c[0] + x.c[1] * y.c[1] + x.c[2] * y.c[2] +
           T(2) * (x.c[3] * y.c[3] + x.c[4] * y.c[4] + x.c[5] * y.c[5]);
  }

  friend bool operator==(const SymTensor3& x, const SymTensor3& y) { return x.c == y.c; }

  friend std::ostream& operator<<(std::ostream& os, const SymTensor3& s) {
    return os << "[" << s.c[0] << ", " << s.c[1] << ", " << s.c[2] << "; " << s.c[3] << ", " << s.c[4]
              << ", " << s.c[5] << "]";
  }
};

/// Product of two symmetric tensors (not symmetric in general).
template <class T>
Mat3<T> operator*(const SymTensor3<T>& x, const SymTensor3<T>& y) {
  return x.full() * y.full();
}

/// Frobenius norm of the full 3x3 matrix.
template <class T>
T frobenius_norm(const SymTensor3<T>& s) {
  using std::sqrt;
  return sqrt(ddot(s, s));
}

template <class T>
T frobenius_norm(const Mat3<T>& m) {
  using std::sqrt;
  T sum = T(0);
  for (const auto& v : m.a) sum += v * v;
  return sqrt(sum);
}

template <class To, class From>
Mat3<To> cast(const Mat3<From>& m) {
  Mat3<To> r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = static_cast<To>(m.a[k]);
  return r;
}

template <class To, class From>
SymTensor3<To> cast(const SymTensor3<From>& s) {
  SymTensor3<To> r;
  for (std::size_t k = 0; k < 6; ++k) r.c[k] = static_cast<To>(s.c[k]);
  return r;
}

}  // namespace stablestrain
