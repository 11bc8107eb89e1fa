#pragma once

// Hyperelastic constitutive models: coupled and decoupled Neo-Hookean and
// Mooney-Rivlin, decoupled Ogden, Hencky strain, and the Neo-Hookean energy.
//
// Every model has a stable form written in terms of E (or e), J - 1 and
// log1p/expm1/log1pmx, next to the textbook (unstable) form written in terms of
// F, J, C and b. Both are templated on the scalar type so that the same source
// runs in single, double and extended precision, and on dual numbers.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "stablestrain/errors.hpp"
#include "stablestrain/kinematics.hpp"
#include "stablestrain/scalar_kernels.hpp"
#include "stablestrain/spectral.hpp"
#include "stablestrain/tensor.hpp"

namespace stablestrain {

enum class Configuration { initial, current };
enum class Form { stable, unstable };
enum class EnergyForm { standard, semistable, stable };
enum class StrainConfiguration { material, spatial };

struct LameParams {
  double lambda = 0;
  double mu = 0;

  void validate() const {
    if (!(mu > 0)) throw std::invalid_argument("LameParams: mu must be > 0");
    if (!(lambda + 2 * mu / 3 > 0)) throw std::invalid_argument("LameParams: lambda + 2 mu / 3 must be > 0");
  }
};

/// `lambda` is the first Lamé parameter for the coupled model and is unused by
/// the isochoric stress (the decoupled bulk term takes κ separately).
struct MooneyRivlinParams {
  double lambda = 0;
  double mu1 = 0;
  double mu2 = 0;

  void validate() const {
    if (!(mu1 >= 0 && mu2 >= 0)) throw std::invalid_argument("MooneyRivlinParams: mu1, mu2 must be >= 0");
    if (!(mu1 + mu2 > 0)) throw std::invalid_argument("MooneyRivlinParams: mu1 + mu2 must be > 0");
  }
};

struct OgdenTerm {
  double mu = 0;
  double alpha = 0;
};

struct OgdenParams {
  double bulk = 0;
  std::vector<OgdenTerm> terms;

  void validate() const {
    if (terms.empty()) throw std::invalid_argument("OgdenParams: need at least one term");
    for (const auto& t : terms)
      if (!(t.mu * t.alpha > 0)) throw std::invalid_argument("OgdenParams: each mu_j * alpha_j must be > 0");
  }
  /// Linearized shear modulus, 2μ = Σ μ_j α_j.
  double shear_modulus() const {
    double two_mu = 0;
    for (const auto& t : terms) two_mu += t.mu * t.alpha;
    return two_mu / 2;
  }
};

struct ElasticModuli {
  double lambda;
  double mu;
  double kappa;
};

/// (Young's modulus, Poisson ratio) -> (λ, μ, κ).
inline ElasticModuli from_youngs(double youngs, double poisson) {
  if (!(youngs > 0)) throw std::invalid_argument("from_youngs: Young's modulus must be > 0");
  if (!(poisson > -1 && poisson < 0.5)) throw std::invalid_argument("from_youngs: Poisson ratio must be in (-1, 0.5)");
  const double lambda = youngs * poisson / ((1 + poisson) * (1 - 2 * poisson));
  const double mu = youngs / (2 * (1 + poisson));
  return {lambda, mu, lambda + 2 * mu / 3};
}

template <class T>
struct StressResult {
  SymTensor3<T> tensor;
  Configuration configuration;
  Form form;
};

/// Kinematic quantities derived from H once, by stable routes.
template <class T>
struct StrainState {
  DisplacementGradient<T> h;
  SymTensor3<T> green_lagrange;  // E
  SymTensor3<T> green_euler;     // e
  T jm1;                         // J - 1
  SymTensor3<T> c_inv;           // C⁻¹ via adj(C) / (1 + jm1)²

  static StrainState from_displacement_gradient(const DisplacementGradient<T>& h) {
    StrainState s;
    s.h = h;
    s.green_lagrange = stablestrain::green_lagrange(h);
    s.green_euler = stablestrain::green_euler(h);
    s.jm1 = stablestrain::jm1(h);
    if (!(s.jm1 > T(-1))) throw InadmissibleState("StrainState: det(I + H) <= 0");
    s.c_inv = inverse_cauchy_green(s.green_lagrange, s.jm1);
    return s;
  }

  T j() const { return T(1) + jm1; }
};

namespace detail {

/// Textbook kinematics: F, J = det F, C = FᵀF, b = FFᵀ, C⁻¹ = inv(C).
template <class T>
struct TextbookKinematics {
  Mat3<T> f;
  T j;
  SymTensor3<T> c;
  SymTensor3<T> b;
  SymTensor3<T> c_inv;

  explicit TextbookKinematics(const DisplacementGradient<T>& h) {
    f = deformation_gradient(h);
    j = f.det();
    if (!(j > T(0))) throw InadmissibleState("det F <= 0");
    c = SymTensor3<T>::symmetric_part(f.transpose() * f);
    b = SymTensor3<T>::symmetric_part(f * f.transpose());
    c_inv = inverse(c);
  }
};

template <class T>
SymTensor3<T> sym(const Mat3<T>& m) {
  return SymTensor3<T>::symmetric_part(m);
}

/// J^(c) = exp(c log1p(J - 1)).
template <class T>
T j_power(const T& jm1_value, double c) {
  using std::exp;
  return exp(T(c) * log1p_stable(jm1_value));
}

template <class T>
T j_power_unstable(const T& j, double c) {
  using std::pow;
  return pow(j, T(c));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Coupled models

/// Coupled Neo-Hookean. Stable: S = (λ/2) J₋₁(J₋₁+2) C⁻¹ + 2μ C⁻¹E,
/// τ = (λ/2) J₋₁(J₋₁+2) I + 2μ e.
template <class T>
StressResult<T> nh_coupled_stress(const StrainState<T>& s, const LameParams& p, Configuration config,
                                  Form form) {
  const T lambda(p.lambda), mu(p.mu);
  const SymTensor3<T> id = SymTensor3<T>::identity();
  SymTensor3<T> out;
  if (form == Form::stable) {
    const T vol = lambda / T(2) * s.jm1 * (s.jm1 + T(2));
    if (config == Configuration::initial)
      out = vol * s.c_inv + (T(2) * mu) * detail::sym(s.c_inv * s.green_lagrange);
    else
      out = vol * id + (T(2) * mu) * s.green_euler;
  } else {
    const detail::TextbookKinematics<T> k(s.h);
    const T vol = lambda / T(2) * (k.j * k.j - T(1));
    if (config == Configuration::initial)
      out = vol * k.c_inv + mu * (id - k.c_inv);
    else
      out = vol * id + mu * (k.b - id);
  }
  return {out, config, form};
}

/// Coupled Mooney-Rivlin. Stable:
///   S = (λ/2) J₋₁(J₋₁+2) C⁻¹ + 2(μ₁+2μ₂) C⁻¹E + 2μ₂ (I₁(E) I - E)
///   τ = (λ/2) J₋₁(J₋₁+2) I + 2(μ₁+2μ₂) e + 2μ₂ (I₁(e) I - e) b
template <class T>
StressResult<T> mr_coupled_stress(const StrainState<T>& s, const MooneyRivlinParams& p, Configuration config,
                                  Form form) {
  const T lambda(p.lambda), mu1(p.mu1), mu2(p.mu2);
  const SymTensor3<T> id = SymTensor3<T>::identity();
  SymTensor3<T> out;
  if (form == Form::stable) {
    const T vol = lambda / T(2) * s.jm1 * (s.jm1 + T(2));
    const T shear = T(2) * (mu1 + T(2) * mu2);
    if (config == Configuration::initial) {
      const SymTensor3<T>& e = s.green_lagrange;
      out = vol * s.c_inv + shear * detail::sym(s.c_inv * e) + (T(2) * mu2) * (e.trace() * id - e);
    } else {
      const SymTensor3<T>& e = s.green_euler;
      const SymTensor3<T> b = cauchy_green(e);
      out = vol * id + shear * e + (T(2) * mu2) * detail::sym((e.trace() * id - e) * b);
    }
  } else {
    const detail::TextbookKinematics<T> k(s.h);
    const T vol = lambda / T(2) * (k.j * k.j - T(1));
    if (config == Configuration::initial) {
      out = vol * k.c_inv + mu1 * (id - k.c_inv) + mu2 * (k.c.trace() * id - T(2) * k.c_inv - k.c);
    } else {
      const SymTensor3<T> b2 = detail::sym(k.b * k.b);
      out = vol * id + mu1 * (k.b - id) + mu2 * (k.b.trace() * k.b - T(2) * id - b2);
    }
  }
  return {out, config, form};
}

// ---------------------------------------------------------------------------
// Decoupled models: volumetric part

/// p = -∂ψ_vol/∂J = -(κ / 2J) J₋₁(J₋₁ + 2) for ψ_vol = κ/4 (J² - 1 - 2 log J).
template <class T>
T volumetric_pressure(const T& jm1_value, double bulk) {
  if (!(jm1_value > T(-1))) throw InadmissibleState("volumetric_pressure: J - 1 must be > -1");
  const T j = T(1) + jm1_value;
  return -(T(bulk) / (T(2) * j)) * jm1_value * (jm1_value + T(2));
}

/// S_vol = -p J C⁻¹ (initial) or τ_vol = -p J I (current).
template <class T>
StressResult<T> volumetric_stress(const StrainState<T>& s, const T& pressure, Configuration config) {
  const T factor = -pressure * s.j();
  const SymTensor3<T> out =
      config == Configuration::initial ? factor * s.c_inv : factor * SymTensor3<T>::identity();
  return {out, config, Form::stable};
}

/// ψ_vol = κ/4 (J₋₁² - 2 log1pmx(J₋₁)).
template <class T>
T volumetric_energy(const T& jm1_value, double bulk, SeriesOrder order = SeriesOrder{}) {
  return T(bulk) / T(4) * (jm1_value * jm1_value - T(2) * log1pmx(jm1_value, order));
}

// ---------------------------------------------------------------------------
// Decoupled models: isochoric part

/// Decoupled Neo-Hookean. Stable: S_iso = 2μ J^(-2/3) C⁻¹ E_dev,
/// τ_iso = 2μ J^(-2/3) e_dev.
template <class T>
StressResult<T> nh_iso_stress(const StrainState<T>& s, double mu_value, Configuration config, Form form) {
  const T mu(mu_value);
  const SymTensor3<T> id = SymTensor3<T>::identity();
  SymTensor3<T> out;
  if (form == Form::stable) {
    const T jm23 = detail::j_power(s.jm1, -2.0 / 3.0);
    if (config == Configuration::initial)
      out = (T(2) * mu * jm23) * detail::sym(s.c_inv * deviatoric(s.green_lagrange));
    else
      out = (T(2) * mu * jm23) * deviatoric(s.green_euler);
  } else {
    const detail::TextbookKinematics<T> k(s.h);
    const T jm23 = detail::j_power_unstable(k.j, -2.0 / 3.0);
    if (config == Configuration::initial)
      out = (mu * jm23) * (id - (k.c.trace() / T(3)) * k.c_inv);
    else
      out = (mu * jm23) * (k.b - (k.b.trace() / T(3)) * id);
  }
  return {out, config, form};
}

/// Decoupled Mooney-Rivlin. Stable:
///   S_iso = 2(μ₁J^(-2/3) + 2μ₂J^(-4/3)) C⁻¹E_dev + 2μ₂J^(-4/3)(I₁(E) I - E)
///           - (4/3) μ₂ J^(-4/3) (I₁(E) + 2 I₂(E)) C⁻¹
///   τ_iso = 2(μ₁J^(-2/3) + 2μ₂J^(-4/3)) e_dev + 2μ₂J^(-4/3)(I₁(e) I - e) b
///           - (4/3) μ₂ J^(-4/3) (I₁(e) + 2 I₂(e)) I
template <class T>
StressResult<T> mr_iso_stress(const StrainState<T>& s, const MooneyRivlinParams& p, Configuration config,
                              Form form) {
  const T mu1(p.mu1), mu2(p.mu2);
  const SymTensor3<T> id = SymTensor3<T>::identity();
  SymTensor3<T> out;
  if (form == Form::stable) {
    const T jm23 = detail::j_power(s.jm1, -2.0 / 3.0);
    const T jm43 = detail::j_power(s.jm1, -4.0 / 3.0);
    const T dev_coef = T(2) * (mu1 * jm23 + T(2) * mu2 * jm43);
    const T two_mu2 = T(2) * mu2 * jm43;
    const T four_thirds_mu2 = T(4) / T(3) * mu2 * jm43;
    if (config == Configuration::initial) {
      const SymTensor3<T>& e = s.green_lagrange;
      const Invariants3<T> inv = invariants(e);
      out = dev_coef * detail::sym(s.c_inv * deviatoric(e)) + two_mu2 * (inv.i1 * id - e) -
            (four_thirds_mu2 * (inv.i1 + T(2) * inv.i2)) * s.c_inv;
    } else {
      const SymTensor3<T>& e = s.green_euler;
      const Invariants3<T> inv = invariants(e);
      const SymTensor3<T> b = cauchy_green(e);
      out = dev_coef * deviatoric(e) + two_mu2 * detail::sym((inv.i1 * id - e) * b) -
            (four_thirds_mu2 * (inv.i1 + T(2) * inv.i2)) * id;
    }
  } else {
    const detail::TextbookKinematics<T> k(s.h);
    const T jm23 = detail::j_power_unstable(k.j, -2.0 / 3.0);
    const T jm43 = detail::j_power_unstable(k.j, -4.0 / 3.0);
    if (config == Configuration::initial) {
      const Invariants3<T> inv = invariants(k.c);
      out = (mu1 * jm23) * (id - (inv.i1 / T(3)) * k.c_inv) +
            (mu2 * jm43) * (inv.i1 * id - k.c - (T(2) / T(3) * inv.i2) * k.c_inv);
    } else {
      const Invariants3<T> inv = invariants(k.b);
      const SymTensor3<T> b2 = detail::sym(k.b * k.b);
      out = (mu1 * jm23) * (k.b - (inv.i1 / T(3)) * id) +
            (mu2 * jm43) * (inv.i1 * k.b - b2 - (T(2) / T(3) * inv.i2) * id);
    }
  }
  return {out, config, form};
}

// ---------------------------------------------------------------------------
// Ogden (initial configuration only)

/// Principal coefficients s_i with S_iso = Σ s_i N_i N_iᵀ, from the
/// eigendecomposition of E. The stable form uses
///   s_1 = 1/(1+2λ₁ᴱ) Σ_j μ_j/3 [2 expm1(α_j ℓ₁) - expm1(α_j ℓ₂) - expm1(α_j ℓ₃)] J^(-α_j/3)
/// (cyclic for s_2, s_3). The unstable form forms the stretches λ_i = √(1+2λ_iᴱ)
/// and J = λ₁λ₂λ₃ and differentiates ψ_iso(λ̄) directly.
template <class T>
std::array<T, 3> ogden_coefficients(const EigenDecomposition3<T>& eig_e, const T& jm1_value,
                                    const OgdenParams& p, Form form) {
  if (!(jm1_value > T(-1))) throw InadmissibleState("ogden_coefficients: J - 1 must be > -1");
  std::array<T, 3> s{T(0), T(0), T(0)};
  if (form == Form::stable) {
    const std::array<T, 3> ell = principal_log_stretches(eig_e);
    const T log_j = log1p_stable(jm1_value);
    using std::exp;
    for (const auto& term : p.terms) {
      const T alpha(term.alpha);
      const T jfac = exp(-(alpha / T(3)) * log_j);
      std::array<T, 3> em;
      for (std::size_t i = 0; i < 3; ++i) em[i] = expm1_stable(alpha * ell[i]);
      const T w = T(term.mu) / T(3) * jfac;
      s[0] += w * (T(2) * em[0] - em[1] - em[2]);
      s[1] += w * (T(2) * em[1] - em[0] - em[2]);
      s[2] += w * (T(2) * em[2] - em[0] - em[1]);
    }
    for (std::size_t i = 0; i < 3; ++i) s[i] = s[i] / (T(1) + T(2) * eig_e.eigenvalues[i]);
  } else {
    using std::pow;
    using std::sqrt;
    std::array<T, 3> stretch;
    for (std::size_t i = 0; i < 3; ++i) {
      const T sq = T(1) + T(2) * eig_e.eigenvalues[i];
      if (!(sq > T(0))) throw InadmissibleState("ogden_coefficients: non-positive stretch");
      stretch[i] = sqrt(sq);
    }
    const T j = stretch[0] * stretch[1] * stretch[2];
    const T jm13 = pow(j, T(-1) / T(3));
    std::array<T, 3> bar, dpsi;
    for (std::size_t k = 0; k < 3; ++k) {
      bar[k] = jm13 * stretch[k];
      dpsi[k] = T(0);
      for (const auto& term : p.terms) dpsi[k] += T(term.mu) * pow(bar[k], T(term.alpha) - T(1));
    }
    const T weighted = bar[0] * dpsi[0] + bar[1] * dpsi[1] + bar[2] * dpsi[2];
    for (std::size_t i = 0; i < 3; ++i)
      s[i] = jm13 / stretch[i] * (dpsi[i] - weighted / (T(3) * bar[i]));
  }
  return s;
}

template <class T>
StressResult<T> ogden_iso_stress(const EigenDecomposition3<T>& eig_e, const T& jm1_value, const OgdenParams& p,
                                 Form form) {
  const std::array<T, 3> s = ogden_coefficients(eig_e, jm1_value, p, form);
  return {eig_e.assemble([&](const T&, std::size_t i) { return s[i]; }), Configuration::initial, form};
}

/// ψ_iso = Σ_j μ_j/α_j [(λ₁^α_j + λ₂^α_j + λ₃^α_j) J^(-α_j/3) - 3].
///
/// Evaluated as Σ_j μ_j/α_j Σ_i expm1mx(α_j m_i) with m_i = ℓ_i - (log J)/3,
/// using Σ_i m_i = 0; the O(δ) terms then never cancel, neither in the value
/// nor in its derivative.
template <class T>
T ogden_iso_energy(const EigenDecomposition3<T>& eig_e, const T& jm1_value, const OgdenParams& p) {
  const std::array<T, 3> ell = principal_log_stretches(eig_e);
  const T third_log_j = log_j(jm1_value) / T(3);
  std::array<T, 3> m;
  for (std::size_t i = 0; i < 3; ++i) m[i] = ell[i] - third_log_j;
  T psi(0);
  for (const auto& term : p.terms) {
    const T alpha(term.alpha);
    psi += T(term.mu) / alpha * (expm1mx(alpha * m[0]) + expm1mx(alpha * m[1]) + expm1mx(alpha * m[2]));
  }
  return psi;
}

// ---------------------------------------------------------------------------
// Hencky strain

/// ½ Σ log1p(2λ_i) N_i N_iᵀ from the eigendecomposition of E (or e).
template <class T>
SymTensor3<T> hencky_from_strain_eigen(const EigenDecomposition3<T>& eig_strain) {
  const std::array<T, 3> ell = principal_log_stretches(eig_strain);
  return eig_strain.assemble([&](const T&, std::size_t i) { return ell[i]; });
}

/// ½ Σ log(λ_i) N_i N_iᵀ from the eigendecomposition of C (or b).
template <class T>
SymTensor3<T> hencky_from_cauchy_green_eigen(const EigenDecomposition3<T>& eig_cg) {
  using std::log;
  return eig_cg.assemble([](const T& lam, std::size_t) {
    if (!(lam > T(0))) throw InadmissibleState("hencky: non-positive Cauchy-Green eigenvalue");
    return log(lam) / T(2);
  });
}

/// Material (E_H = ½ log C) or spatial (e_H = ½ log b) Hencky strain.
template <class T>
SymTensor3<T> hencky_strain(const StrainState<T>& s, StrainConfiguration config, Form form) {
  if (form == Form::stable) {
    const SymTensor3<T>& strain = config == StrainConfiguration::material ? s.green_lagrange : s.green_euler;
    return hencky_from_strain_eigen(eig_sym3(strain));
  }
  const detail::TextbookKinematics<T> k(s.h);
  return hencky_from_cauchy_green_eigen(eig_sym3(config == StrainConfiguration::material ? k.c : k.b));
}

// ---------------------------------------------------------------------------
// Energies

/// log J - tr E = ½ (log1pmx(j + 2 tr E) + j), j = J² - 1 - 2 tr E.
template <class T>
T log_j_minus_trace(const SymTensor3<T>& e, SeriesOrder order = SeriesOrder{}) {
  const T j = j_helper(e);
  return (log1pmx(j + T(2) * e.trace(), order) + j) / T(2);
}

/// Coupled Neo-Hookean energy ψ(E) = λ/4 (J² - 1 - 2 log J) - μ (log J - tr E).
///   standard:   J = √det(I + 2E), evaluated literally
///   semistable: J₋₁ and log1p(J₋₁), but O(δ) terms still subtracted
///   stable:     λ/4 (J₋₁² - 2 log1pmx(J₋₁)) - μ/2 (log1pmx(j + 2 tr E) + j)
template <class T>
T nh_energy(const SymTensor3<T>& e, const LameParams& p, EnergyForm form, SeriesOrder order = SeriesOrder{}) {
  const T lambda(p.lambda), mu(p.mu);
  switch (form) {
    case EnergyForm::standard: {
      const T det_c = cauchy_green(e).det();
      if (!(det_c > T(0))) throw InadmissibleState("nh_energy: det(I + 2E) <= 0");
      using std::log;
      using std::sqrt;
      const T j = sqrt(det_c);
      const T log_j_value = log(j);
      return lambda / T(4) * (j * j - T(1) - T(2) * log_j_value) - mu * (log_j_value - e.trace());
    }
    case EnergyForm::semistable: {
      const T jm = jm1_from_strain(e);
      const T lj = log_j(jm);
      return lambda / T(4) * (jm * (jm + T(2)) - T(2) * lj) - mu * (lj - e.trace());
    }
    case EnergyForm::stable: {
      const T jm = jm1_from_strain(e);
      if (!(jm > T(-1))) throw InadmissibleState("nh_energy: J <= 0");
      return lambda / T(4) * (jm * jm - T(2) * log1pmx(jm, order)) - mu * log_j_minus_trace(e, order);
    }
  }
  throw std::logic_error("nh_energy: bad form");
}

/// Coupled Neo-Hookean energy in the stable form.
template <class T>
T coupled_energy(const SymTensor3<T>& e, const LameParams& p, SeriesOrder order = SeriesOrder{}) {
  return nh_energy(e, p, EnergyForm::stable, order);
}

/// Coupled Mooney-Rivlin energy
///   λ/4 (J² - 1 - 2 log J) - (μ₁+2μ₂) log J + μ₁/2 (I₁(C) - 3) + μ₂/2 (I₂(C) - 3)
/// rewritten with I₁(C) = 3 + 2I₁(E), I₂(C) = 3 + 4I₁(E) + 4I₂(E) as
///   λ/4 (J₋₁² - 2 log1pmx(J₋₁)) - (μ₁+2μ₂)(log J - tr E) + 2μ₂ I₂(E).
template <class T>
T coupled_energy(const SymTensor3<T>& e, const MooneyRivlinParams& p, SeriesOrder order = SeriesOrder{}) {
  const T lambda(p.lambda), mu1(p.mu1), mu2(p.mu2);
  const T jm = jm1_from_strain(e);
  if (!(jm > T(-1))) throw InadmissibleState("coupled_energy: J <= 0");
  return lambda / T(4) * (jm * jm - T(2) * log1pmx(jm, order)) -
         (mu1 + T(2) * mu2) * log_j_minus_trace(e, order) + T(2) * mu2 * invariants(e).i2;
}

template <class T, class Params>
T coupled_energy(const StrainState<T>& s, const Params& p, SeriesOrder order = SeriesOrder{}) {
  return coupled_energy(s.green_lagrange, p, order);
}

}  // namespace stablestrain
