#pragma once

// Symmetric 3x3 eigendecomposition (cyclic Jacobi) and principal log-stretches.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "stablestrain/dual.hpp"
#include "stablestrain/errors.hpp"
#include "stablestrain/scalar_kernels.hpp"
#include "stablestrain/tensor.hpp"

namespace stablestrain {

/// Eigenvalues in ascending order with orthonormal eigenvectors. Each
/// eigenvector's largest-magnitude component is positive.
template <class T>
struct EigenDecomposition3 {
  std::array<T, 3> eigenvalues{};
  std::array<Vec3<T>, 3> eigenvectors{};

  /// Σ f(λ_i) N_i N_iᵀ.
  template <class F>
  SymTensor3<T> assemble(F&& f) const {
    SymTensor3<T> r = SymTensor3<T>::zero();
    for (std::size_t i = 0; i < 3; ++i) r += f(eigenvalues[i], i) * SymTensor3<T>::outer(eigenvectors[i]);
    return r;
  }

  SymTensor3<T> reconstruct() const {
    return assemble([](const T& lam, std::size_t) { return lam; });
  }
};

namespace detail {

template <class T>
bool all_finite(const SymTensor3<T>& a) {
  using std::abs;
  for (const auto& v : a.c)
    if (!(abs(v) <= std::numeric_limits<T>::max())) return false;
  return true;
}

template <class T>
void jacobi_rotate(Mat3<T>& a, Mat3<T>& v, std::size_t p, std::size_t q, std::size_t sweep) {
  using std::abs;
  using std::sqrt;
  const T apq = a(p, q);
  if (apq == T(0)) return;
  const T g = T(100) * abs(apq);
  if (sweep > 3 && abs(a(p, p)) + g == abs(a(p, p)) && abs(a(q, q)) + g == abs(a(q, q))) {
    a(p, q) = a(q, p) = T(0);
    return;
  }
  const T h = a(q, q) - a(p, p);
  T t;
  if (abs(h) + g == abs(h)) {
    t = apq / h;
  } else {
    const T theta = h / (T(2) * apq);
    t = T(1) / (abs(theta) + sqrt(T(1) + theta * theta));
    if (theta < T(0)) t = -t;
  }
  const T c = T(1) / sqrt(T(1) + t * t);
  const T s = t * c;
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = T(0);
  const std::size_t r = 3 - p - q;
  const T arp = a(r, p);
  const T arq = a(r, q);
  a(r, p) = a(p, r) = c * arp - s * arq;
  a(r, q) = a(q, r) = s * arp + c * arq;
  for (std::size_t k = 0; k < 3; ++k) {
    const T vkp = v(k, p);
    const T vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace detail

template <RealScalar T>
EigenDecomposition3<T> eig_sym3(const SymTensor3<T>& sym) {
  if (!detail::all_finite(sym)) throw std::domain_error("eig_sym3: non-finite input");
  using std::abs;
  Mat3<T> a = sym.full();
  Mat3<T> v = Mat3<T>::identity();
  constexpr std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t sweep = 0; sweep < 64; ++sweep) {
    if (abs(a(0, 1)) + abs(a(0, 2)) + abs(a(1, 2)) == T(0)) break;
    for (auto [p, q] : pairs) detail::jacobi_rotate(a, v, p, q, sweep);
  }

  std::array<std::size_t, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition3<T> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t col = order[i];
    out.eigenvalues[i] = a(col, col);
    Vec3<T> n;
    std::size_t big = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      n[k] = v(k, col);
      if (abs(n[k]) > abs(n[big])) big = k;
    }
    if (n[big] < T(0))
      for (std::size_t k = 0; k < 3; ++k) n[k] = -n[k];
    out.eigenvectors[i] = n;
  }
  return out;
}

/// Eigendecomposition of a dual-valued tensor: the primal is decomposed and
/// first-order perturbation theory supplies the derivative channels,
///   dλ_i = N_iᵀ dA N_i,   dN_i = Σ_{k≠i} (N_kᵀ dA N_i) / (λ_i - λ_k) N_k.
/// Eigenvector channels skip pairs with |λ_i - λ_k| below 100 ε ‖A‖; spectral
/// functions with equal weights on such pairs are unaffected.
template <RealScalar T, std::size_t N>
EigenDecomposition3<Dual<T, N>> eig_sym3(const SymTensor3<Dual<T, N>>& sym) {
  SymTensor3<T> primal;
  for (std::size_t k = 0; k < 6; ++k) primal.c[k] = sym.c[k].value;
  const EigenDecomposition3<T> base = eig_sym3(primal);
  using std::abs;
  const T gap_floor = T(100) * eps_machine<T>() * frobenius_norm(primal);

  EigenDecomposition3<Dual<T, N>> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.eigenvalues[i] = Dual<T, N>(base.eigenvalues[i]);
    for (std::size_t k = 0; k < 3; ++k) out.eigenvectors[i][k] = Dual<T, N>(base.eigenvectors[i][k]);
  }
  for (std::size_t ch = 0; ch < N; ++ch) {
    SymTensor3<T> da;
    for (std::size_t k = 0; k < 6; ++k) da.c[k] = sym.c[k].grad[ch];
    const Mat3<T> dam = da.full();
    std::array<Vec3<T>, 3> dan;
    for (std::size_t i = 0; i < 3; ++i) dan[i] = dam * base.eigenvectors[i];
    for (std::size_t i = 0; i < 3; ++i) {
      out.eigenvalues[i].grad[ch] = dot(base.eigenvectors[i], dan[i]);
      for (std::size_t j = 0; j < 3; ++j) {
        if (j == i) continue;
        const T gap = base.eigenvalues[i] - base.eigenvalues[j];
        if (abs(gap) <= gap_floor) continue;
        const T coef = dot(base.eigenvectors[j], dan[i]) / gap;
        for (std::size_t k = 0; k < 3; ++k) out.eigenvectors[i][k].grad[ch] += coef * base.eigenvectors[j][k];
      }
    }
  }
  return out;
}

/// ℓ_i = log λ_i = ½ log1p(2 λ_i^E) from the eigenvalues of a Green strain.
template <class T>
std::array<T, 3> principal_log_stretches(const EigenDecomposition3<T>& eig_strain) {
  std::array<T, 3> ell;
  for (std::size_t i = 0; i < 3; ++i) {
    const T two_lam = T(2) * eig_strain.eigenvalues[i];
    if (!(two_lam > T(-1))) throw InadmissibleState("principal_log_stretches: 1 + 2 lambda_E <= 0");
    ell[i] = log1p_stable(two_lam) / T(2);
  }
  return ell;
}

}  // namespace stablestrain
