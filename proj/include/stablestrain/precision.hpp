#pragma once

#include <cmath>
#include <limits>
#include <type_traits>

#include <boost/multiprecision/float128.hpp>

namespace stablestrain {

/// Reference precision used by the oracle: IEEE binary128, 113-bit mantissa.
using Extended = boost::multiprecision::float128;

template <class T>
struct is_real_scalar
    : std::bool_constant<std::is_floating_point_v<T> || std::is_same_v<T, Extended>> {};

template <class T>
concept RealScalar = is_real_scalar<T>::value;

/// Spacing of floating point numbers at 1 (2^-52 for double, 2^-23 for float).
template <RealScalar T>
constexpr T eps_machine() {
  return std::numeric_limits<T>::epsilon();
}

template <RealScalar T>
constexpr int mantissa_bits() {
  return std::numeric_limits<T>::digits;
}

static_assert(mantissa_bits<Extended>() >= 100);

/// Next wider type used where a single subtraction would otherwise lose bits.
template <class T>
struct wider {
  using type = T;
};
template <>
struct wider<float> {
  using type = double;
};
template <>
struct wider<double> {
  using type = long double;
};
template <class T>
using wider_t = typename wider<T>::type;

enum class Precision { single, double_, extended };

inline const char* to_string(Precision p) {
  switch (p) {
    case Precision::single: return "single";
    case Precision::double_: return "double";
    case Precision::extended: return "extended";
  }
  return "?";
}

template <class T>
constexpr Precision precision_of() {
  if constexpr (std::is_same_v<T, float>) return Precision::single;
  else if constexpr (std::is_same_v<T, double>) return Precision::double_;
  else return Precision::extended;
}

}  // namespace stablestrain
