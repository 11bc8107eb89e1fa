#pragma once

// Strain measures and volume change as functions of the displacement gradient
// H = du/dX. Stable routines never form F = I + H; the *_unstable variants do
// and are kept as baselines.

#include <cmath>

#include "stablestrain/errors.hpp"
#include "stablestrain/precision.hpp"
#include "stablestrain/scalar_kernels.hpp"
#include "stablestrain/tensor.hpp"

namespace stablestrain {

template <class T>
using DisplacementGradient = Mat3<T>;

/// E = ½(H + Hᵀ + HᵀH).
template <class T>
SymTensor3<T> green_lagrange(const DisplacementGradient<T>& h) {
  SymTensor3<T> e;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const T quad = h(0, i) * h(0, j) + h(1, i) * h(1, j) + h(2, i) * h(2, j);
      e(i, j) = (h(i, j) + h(j, i) + quad) / T(2);
    }
  }
  return e;
}

/// e = ½(H + Hᵀ + HHᵀ).
template <class T>
SymTensor3<T> green_euler(const DisplacementGradient<T>& h) {
  SymTensor3<T> e;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const T quad = h(i, 0) * h(j, 0) + h(i, 1) * h(j, 1) + h(i, 2) * h(j, 2);
      e(i, j) = (h(i, j) + h(j, i) + quad) / T(2);
    }
  }
  return e;
}

template <class T>
Mat3<T> deformation_gradient(const DisplacementGradient<T>& h) {
  return Mat3<T>::identity() + h;
}

/// E = ½(FᵀF - I). Loses digits when H is small.
template <class T>
SymTensor3<T> green_lagrange_unstable(const DisplacementGradient<T>& h) {
  const Mat3<T> f = deformation_gradient(h);
  const SymTensor3<T> c = SymTensor3<T>::symmetric_part(f.transpose() * f);
  return T(0.5) * (c - SymTensor3<T>::identity());
}

/// e = ½(FFᵀ - I). Loses digits when H is small.
template <class T>
SymTensor3<T> green_euler_unstable(const DisplacementGradient<T>& h) {
  const Mat3<T> f = deformation_gradient(h);
  const SymTensor3<T> b = SymTensor3<T>::symmetric_part(f * f.transpose());
  return T(0.5) * (b - SymTensor3<T>::identity());
}

/// det(I + H) - 1 = tr H + (sum of principal 2x2 minors of H) + det H.
template <class T>
T jm1(const DisplacementGradient<T>& h) {
  const T minors = h(0, 0) * h(1, 1) + h(0, 0) * h(2, 2) + h(1, 1) * h(2, 2);
  const T cross = h(0, 1) * h(1, 0) + h(0, 2) * h(2, 0) + h(1, 2) * h(2, 1);
  return h.det() + h.trace() + minors - cross;
}

template <class T>
T jm1_unstable(const DisplacementGradient<T>& h) {
  return deformation_gradient(h).det() - T(1);
}

/// log J from J - 1.
template <class T>
T log_j(const T& jm1_value) {
  if (!(jm1_value > T(-1))) throw InadmissibleState("log_j: J - 1 must be > -1");
  return log1p_stable(jm1_value);
}

template <class T>
struct Invariants3 {
  T i1, i2, i3;
};

/// Principal invariants (trace, sum of principal minors, determinant).
template <class T>
Invariants3<T> invariants(const SymTensor3<T>& a) {
  const auto& c = a.c;
  const T i2 = c[0] * c[1] - c[3] * c[3] + c[0] * c[2] - c[4] * c[4] + c[1] * c[2] - c[5] * c[5];
  return {a.trace(), i2, a.det()};
}

/// J² - 1 - 2 tr E = 4 I₂(E) + 8 I₃(E), from det(I + 2E) = 1 + 2I₁ + 4I₂ + 8I₃.
template <class T>
T j_helper(const SymTensor3<T>& e) {
  const Invariants3<T> inv = invariants(e);
  return T(4) * inv.i2 + T(8) * inv.i3;
}

/// J - 1 = (J² - 1) / (J + 1) using only E.
template <class T>
T jm1_from_strain(const SymTensor3<T>& e) {
  const T j2m1 = j_helper(e) + T(2) * e.trace();
  if (j2m1 < T(-1)) throw InadmissibleState("jm1_from_strain: det(I + 2E) < 0");
  using std::sqrt;
  const T j = sqrt(T(1) + j2m1);
  return j2m1 / (j + T(1));
}

template <class T>
SymTensor3<T> deviatoric(const SymTensor3<T>& a) {
  const T third_tr = a.trace() / T(3);
  SymTensor3<T> d = a;
  d.c[0] -= third_tr;
  d.c[1] -= third_tr;
  d.c[2] -= third_tr;
  return d;
}

/// I + 2·strain: C from E, or b from e.
template <class T>
SymTensor3<T> cauchy_green(const SymTensor3<T>& strain) {
  return SymTensor3<T>::identity() + T(2) * strain;
}

/// C⁻¹ = adj(C) / J² with J - 1 supplied from a stable route.
template <class T>
SymTensor3<T> inverse_cauchy_green(const SymTensor3<T>& strain, const T& jm1_value) {
  if (!(jm1_value > T(-1))) throw InadmissibleState("inverse_cauchy_green: J <= 0");
  const T j = T(1) + jm1_value;
  return (T(1) / (j * j)) * cauchy_green(strain).adjugate();
}

/// Plain inverse through adjugate and determinant; singular input throws.
template <class T>
SymTensor3<T> inverse(const SymTensor3<T>& a) {
  const T d = a.det();
  if (d == T(0)) throw InadmissibleState("inverse: singular tensor");
  return (T(1) / d) * a.adjugate();
}

}  // namespace stablestrain
