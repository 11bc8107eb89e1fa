#pragma once

// Forward-mode dual numbers with N simultaneous derivative channels.
//
// Dual<T, N> is a scalar for every kernel in this library: the stable scalar
// kernels get dedicated overloads whose derivative channels use the stable
// closed forms
//   d log1p(x)   = dx / (1 + x)
//   d expm1(x)   = (expm1(x) + 1) dx
//   d log1pmx(x) = -x / (1 + x) dx
//   d expm1mx(x) = expm1(x) dx
// so no derivative is formed by subtracting O(1) quantities.

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <type_traits>

#include "stablestrain/precision.hpp"
#include "stablestrain/scalar_kernels.hpp"

namespace stablestrain {

template <class T, std::size_t N>
struct Dual {
  using value_type = T;
  static constexpr std::size_t channels = N;

  T value{};
  std::array<T, N> grad{};

  constexpr Dual() = default;
  constexpr Dual(T v) : value(v) { grad.fill(T(0)); }  // NOLINT(google-explicit-constructor)
  template <class A>
    requires(std::is_arithmetic_v<A> && !std::is_same_v<A, T>)
  constexpr Dual(A v) : value(T(v)) {  // NOLINT(google-explicit-constructor)
    grad.fill(T(0));
  }
  constexpr Dual(T v, const std::array<T, N>& g) : value(v), grad(g) {}

  /// Independent variable seeded in channel k.
  static constexpr Dual variable(T v, std::size_t k) {
    Dual d(v);
    d.grad[k] = T(1);
    return d;
  }

  Dual& operator+=(const Dual& o) {
    value += o.value;
    for (std::size_t i = 0; i < N; ++i) grad[i] += o.grad[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    for (std::size_t i = 0; i < N; ++i) grad[i] -= o.grad[i];
    return *this;
  }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }

  friend Dual operator+(const Dual& a) { return a; }
  friend Dual operator-(const Dual& a) {
    Dual r(-a.value);
    for (std::size_t i = 0; i < N; ++i) r.grad[i] = -a.grad[i];
    return r;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.value * b.value);
    for (std::size_t i = 0; i < N; ++i) r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    const T q = a.value / b.value;
    Dual r(q);
    for (std::size_t i = 0; i < N; ++i) r.grad[i] = (a.grad[i] - q * b.grad[i]) / b.value;
    return r;
  }

  friend bool operator==(const Dual& a, const Dual& b) { return a.value == b.value; }
  friend bool operator!=(const Dual& a, const Dual& b) { return a.value != b.value; }
  friend bool operator<(const Dual& a, const Dual& b) { return a.value < b.value; }
  friend bool operator>(const Dual& a, const Dual& b) { return a.value > b.value; }
  friend bool operator<=(const Dual& a, const Dual& b) { return a.value <= b.value; }
  friend bool operator>=(const Dual& a, const Dual& b) { return a.value >= b.value; }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) { return os << d.value << "+eps"; }
};

template <class T>
struct is_dual : std::false_type {};
template <class T, std::size_t N>
struct is_dual<Dual<T, N>> : std::true_type {};
template <class T>
inline constexpr bool is_dual_v = is_dual<T>::value;

/// Primal value of a (possibly dual) scalar.
template <class T>
constexpr const auto& value_of(const T& x) {
  if constexpr (is_dual_v<T>) return value_of(x.value);
  else return x;
}

namespace detail {

// f(a) with f'(a) supplied.
template <class T, std::size_t N>
Dual<T, N> chain(const Dual<T, N>& a, T f, T df) {
  Dual<T, N> r(f);
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = df * a.grad[i];
  return r;
}

}  // namespace detail

template <class T, std::size_t N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
  using std::sqrt;
  const T s = sqrt(a.value);
  return detail::chain(a, s, T(1) / (T(2) * s));
}

template <class T, std::size_t N>
Dual<T, N> exp(const Dual<T, N>& a) {
  using std::exp;
  const T e = exp(a.value);
  return detail::chain(a, e, e);
}

template <class T, std::size_t N>
Dual<T, N> log(const Dual<T, N>& a) {
  using std::log;
  return detail::chain(a, log(a.value), T(1) / a.value);
}

template <class T, std::size_t N>
Dual<T, N> log1p(const Dual<T, N>& a) {
  using std::log1p;
  return detail::chain(a, log1p(a.value), T(1) / (T(1) + a.value));
}

template <class T, std::size_t N>
Dual<T, N> expm1(const Dual<T, N>& a) {
  using std::expm1;
  const T em = expm1(a.value);
  return detail::chain(a, em, em + T(1));
}

template <class T, std::size_t N>
Dual<T, N> abs(const Dual<T, N>& a) {
  return a.value < T(0) ? -a : a;
}

/// a^p for a constant exponent p.
template <class T, std::size_t N>
Dual<T, N> pow(const Dual<T, N>& a, const T& p) {
  using std::pow;
  const T v = pow(a.value, p);
  return detail::chain(a, v, p * pow(a.value, p - T(1)));
}

template <class T, std::size_t N>
Dual<T, N> log1p_stable(const Dual<T, N>& a) {
  const T v = log1p_stable(a.value);
  return detail::chain(a, v, T(1) / (T(1) + a.value));
}

template <class T, std::size_t N>
Dual<T, N> expm1_stable(const Dual<T, N>& a) {
  const T em = expm1_stable(a.value);
  return detail::chain(a, em, em + T(1));
}

template <class T, std::size_t N>
Dual<T, N> log1pmx(const Dual<T, N>& a, SeriesOrder order = SeriesOrder{}) {
  const T v = log1pmx(a.value, order);
  return detail::chain(a, v, -a.value / (T(1) + a.value));
}

template <class T, std::size_t N>
Dual<T, N> expm1mx(const Dual<T, N>& a) {
  return detail::chain(a, expm1mx(a.value), expm1_stable(a.value));
}

}  // namespace stablestrain
