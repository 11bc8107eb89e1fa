#pragma once

// Extended-precision reference evaluation and the relative-error protocol:
// sample a unit direction Ĥ, form εĤ in the precision under test, evaluate the
// quantity there and (from the exactly promoted input) in Extended, and report
// the Frobenius-norm relative error.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>

#include "stablestrain/precision.hpp"
#include "stablestrain/tensor.hpp"

namespace stablestrain {

/// xoshiro256** (Blackman & Vigna), state seeded from splitmix64.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in (0, 1), 53 random bits, never 0.
  double uniform_open();
  /// Standard normal deviate by the Box-Muller transform (both outputs used).
  double normal();

 private:
  std::array<std::uint64_t, 4> s_{};
  bool has_spare_ = false;
  double spare_ = 0;
};

/// Ĥ/‖Ĥ‖_F where Ĥ holds |N(0,1)| deviates from the stream selected by
/// (seed, index). Deterministic across builds.
Mat3<double> sample_direction(std::uint64_t seed, std::uint64_t index = 0);

/// Signals a zero reference, for which relative error is undefined.
class UndefinedRelativeError : public std::domain_error {
 public:
  UndefinedRelativeError() : std::domain_error("relative error undefined: reference norm is zero") {}
};

namespace detail {

template <class T>
Extended to_extended_norm_diff(const T& value, const Extended& ref, Extended& ref_norm) {
  using boost::multiprecision::abs;
  ref_norm = abs(ref);
  return abs(static_cast<Extended>(value) - ref);
}

template <class T>
Extended to_extended_norm_diff(const SymTensor3<T>& value, const SymTensor3<Extended>& ref, Extended& ref_norm) {
  ref_norm = frobenius_norm(ref);
  return frobenius_norm(cast<Extended>(value) - ref);
}

}  // namespace detail

/// The input εH as seen by precision T.
template <RealScalar T>
Mat3<T> scaled_input(const Mat3<double>& direction, double eps) {
  return cast<T>(eps * direction);
}

/// Relative error of `test` evaluated in precision T against `reference`
/// evaluated in Extended at the same (exactly promoted) input. Both callables
/// are generic: Mat3<S> -> S or SymTensor3<S>.
template <RealScalar T, class Test, class Reference>
double rel_error(Test&& test, Reference&& reference, const Mat3<double>& direction, double eps) {
  const Mat3<T> h = scaled_input<T>(direction, eps);
  const auto value = test(h);
  const auto ref = reference(cast<Extended>(h));
  Extended ref_norm;
  const Extended diff = detail::to_extended_norm_diff(value, ref, ref_norm);
  if (ref_norm == 0) throw UndefinedRelativeError();
  return static_cast<double>(diff / ref_norm);
}

/// Relative error of a quantity against its own Extended evaluation.
template <RealScalar T, class Quantity>
double rel_error(Quantity&& q, const Mat3<double>& direction, double eps) {
  return rel_error<T>(q, q, direction, eps);
}

}  // namespace stablestrain
