#pragma once

// Stress from a scalar energy by forward-mode differentiation, S = ∂ψ/∂E.
//
// Symmetric-argument convention: ψ is evaluated on the tensor assembled from
// the six stored components, so seeding the stored xy component moves E_xy and
// E_yx together. That directional derivative is ∂ψ/∂E_xy + ∂ψ/∂E_yx = 2 S_xy;
// off-diagonal channels are halved before they are reported.

#include <cstddef>

#include "stablestrain/dual.hpp"
#include "stablestrain/tensor.hpp"

namespace stablestrain {

template <class T>
struct EnergyGradient {
  T energy;
  SymTensor3<T> stress;
};

/// `psi` must be callable with SymTensor3<Dual<T, 6>>.
template <class T, class Energy>
EnergyGradient<T> energy_and_gradient(Energy&& psi, const SymTensor3<T>& e) {
  using D = Dual<T, 6>;
  SymTensor3<D> seeded;
  for (std::size_t k = 0; k < 6; ++k) seeded.c[k] = D::variable(e.c[k], k);
  const D value = psi(seeded);
  EnergyGradient<T> out;
  out.energy = value.value;
  for (std::size_t k = 0; k < 6; ++k) out.stress.c[k] = k < 3 ? value.grad[k] : value.grad[k] / T(2);
  return out;
}

template <class T, class Energy>
SymTensor3<T> grad_energy(Energy&& psi, const SymTensor3<T>& e) {
  return energy_and_gradient(psi, e).stress;
}

}  // namespace stablestrain
