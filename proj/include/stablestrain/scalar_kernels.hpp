#pragma once

// Stable elementary kernels shared by every precision (float, double, Extended)
// and by the dual-number type in dual.hpp.

#include <cmath>
#include <stdexcept>
#include <string>

#include "stablestrain/precision.hpp"

namespace stablestrain {

/// Number of artanh-series terms summed beyond the leading term in log1pmx.
class SeriesOrder {
 public:
  static constexpr int kDefault = 6;

  constexpr SeriesOrder() = default;
  constexpr explicit SeriesOrder(int n_terms) : n_(n_terms) {
    if (n_terms < 1) throw std::invalid_argument("SeriesOrder: n_terms must be >= 1");
  }
  constexpr int n_terms() const { return n_; }

 private:
  int n_ = kDefault;
};

namespace detail {

[[noreturn]] inline void throw_log_domain(const char* fn) {
  throw std::domain_error(std::string(fn) + ": argument must be > -1");
}

}  // namespace detail

template <RealScalar T>
T log1p_stable(T x) {
  if (!(x > T(-1))) detail::throw_log_domain("log1p_stable");
  using std::log1p;
  return log1p(x);
}

/// log1p through 2 artanh(x / (2 + x)); for platforms without a usable log1p.
template <RealScalar T>
T log1p_artanh(T x) {
  if (!(x > T(-1))) detail::throw_log_domain("log1p_artanh");
  using std::atanh;
  return T(2) * atanh(x / (T(2) + x));
}

template <RealScalar T>
T expm1_stable(T x) {
  using std::expm1;
  return expm1(x);
}

/// expm1 through 2 tanh(x/2) / (1 - tanh(x/2)). Overflows to +inf for large x.
template <RealScalar T>
T expm1_tanh(T x) {
  using std::tanh;
  const T t = tanh(x / T(2));
  return T(2) * t / (T(1) - t);
}

/// Largest |x / (2 + x)| for which the default-order series of log1pmx is
/// truncated below eps_machine<T>(). Above it log1pmx falls back to
/// log1p(x) - x evaluated in wider_t<T>.
template <RealScalar T>
T log1pmx_cutoff() {
  // First dropped term 2 r^15 / 15 against |log1pmx| ~ 2 r^2.
  static const T cut = T(std::pow(15.0 * static_cast<double>(eps_machine<T>()),
                                  1.0 / (2 * SeriesOrder::kDefault + 1)));
  return cut;
}

/// The truncated series alone, with no fallback. Used by the order study.
template <RealScalar T>
T log1pmx_series(T x, SeriesOrder order) {
  if (!(x > T(-1))) detail::throw_log_domain("log1pmx_series");
  const T r = x / (T(2) + x);
  const T r2 = r * r;
  const int n = order.n_terms();
  T p = T(1) / T(2 * n + 1);
  for (int k = n - 1; k >= 1; --k) p = T(1) / T(2 * k + 1) + r2 * p;
  return -x * x / (T(2) + x) + T(2) * (r * r2 * p);
}

/// log(1 + x) - x without subtracting O(x) quantities:
///   -x^2 / (2 + x) + 2 sum_{n=1..order} r^(2n+1) / (2n+1),  r = x / (2 + x).
template <RealScalar T>
T log1pmx(T x, SeriesOrder order = SeriesOrder{}) {
  if (!(x > T(-1))) detail::throw_log_domain("log1pmx");
  using std::abs;
  const T r = x / (T(2) + x);
  if (abs(r) > log1pmx_cutoff<T>()) {
    using W = wider_t<T>;
    using std::log1p;
    const W xw = static_cast<W>(x);
    return static_cast<T>(log1p(xw) - xw);
  }
  return log1pmx_series(x, order);
}

/// exp(x) - 1 - x, O(x^2) near zero. Taylor series for |x| <= 1/2.
template <RealScalar T>
T expm1mx(T x) {
  using std::abs;
  if (abs(x) > T(0.5)) {
    using W = wider_t<T>;
    using std::expm1;
    const W xw = static_cast<W>(x);
    return static_cast<T>(expm1(xw) - xw);
  }
  T term = x * x / T(2);
  T sum = term;
  for (int k = 3; k < 64; ++k) {
    term *= x / T(k);
    const T next = sum + term;
    if (next == sum) break;
    sum = next;
  }
  return sum;
}

}  // namespace stablestrain
