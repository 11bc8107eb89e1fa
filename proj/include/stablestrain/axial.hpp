#pragma once

// Single trilinear hexahedron on [0,1]³ under axial tension/compression with
// symmetry (free-slip) boundary conditions, solved by Newton's method.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "stablestrain/constitutive.hpp"
#include "stablestrain/dual.hpp"
#include "stablestrain/kinematics.hpp"

namespace stablestrain {

struct AxialConfig {
  double youngs = 2.8;
  double poisson = 0.4;
  double eps_axial = 1e-12;
  Form form = Form::stable;
  int max_newton = 10;
  std::string quadrature = "2x2x2";

  void validate() const;
};

struct NewtonReport {
  std::vector<double> residual_norms;
  double force_x0 = 0;
  double force_x1 = 0;
  double force_imbalance = 0;
  bool converged = false;
  /// u_y on the four y = 1 nodes, then u_z on the four z = 1 nodes.
  std::array<double, 8> free_displacements{};

  int iterations() const { return static_cast<int>(residual_norms.size()) - 1; }
};

namespace axial {

constexpr int kNodes = 8;
constexpr int kFree = 8;

/// Node a sits at (a & 1, (a >> 1) & 1, (a >> 2) & 1).
constexpr std::array<int, 3> node_coords(int a) { return {a & 1, (a >> 1) & 1, (a >> 2) & 1}; }

/// Free DOFs as (node, component): u_y at y = 1 nodes, then u_z at z = 1 nodes.
std::array<std::array<int, 2>, kFree> free_dofs();

/// Nodal displacements (node-major, 3 per node) from the prescribed axial
/// displacement and the free unknowns.
template <class S>
std::array<std::array<S, 3>, kNodes> nodal_displacements(double eps_axial, const std::array<S, kFree>& free) {
  std::array<std::array<S, 3>, kNodes> u;
  for (int a = 0; a < kNodes; ++a) {
    const auto x = node_coords(a);
    u[a] = {S(x[0] == 1 ? eps_axial : 0.0), S(0), S(0)};
  }
  const auto dofs = free_dofs();
  for (int k = 0; k < kFree; ++k) u[dofs[k][0]][dofs[k][1]] = free[k];
  return u;
}

/// Trilinear shape-function gradients ∂N_a/∂X at reference point q ∈ [0,1]³.
inline std::array<std::array<double, 3>, kNodes> shape_gradients(const std::array<double, 3>& q) {
  std::array<std::array<double, 3>, kNodes> dn;
  for (int a = 0; a < kNodes; ++a) {
    const auto x = node_coords(a);
    std::array<double, 3> f1d, df1d;
    for (int d = 0; d < 3; ++d) {
      f1d[d] = x[d] == 1 ? q[d] : 1.0 - q[d];
      df1d[d] = x[d] == 1 ? 1.0 : -1.0;
    }
    dn[a] = {df1d[0] * f1d[1] * f1d[2], f1d[0] * df1d[1] * f1d[2], f1d[0] * f1d[1] * df1d[2]};
  }
  return dn;
}

/// First Piola-Kirchhoff stress P = F S at a reference point, coupled
/// Neo-Hookean S in the requested form. The unstable form works like a
/// textbook code: F is interpolated from current nodal positions X_a + u_a,
/// which rounds away the low digits of small displacements.
template <class S>
Mat3<S> first_piola(const std::array<std::array<S, 3>, kNodes>& u, const std::array<std::array<double, 3>, kNodes>& dn,
                    const LameParams& lame, Form form) {
  Mat3<S> h = Mat3<S>::zero();
  for (int a = 0; a < kNodes; ++a) {
    const auto x = node_coords(a);
    for (int i = 0; i < 3; ++i) {
      const S nodal = form == Form::unstable ? S(double(x[i])) + u[a][i] : u[a][i];
      for (int j = 0; j < 3; ++j) h(i, j) += nodal * S(dn[a][j]);
    }
  }
  if (form == Form::unstable) h = h - Mat3<S>::identity();
  const auto state = StrainState<S>::from_displacement_gradient(h);
  const SymTensor3<S> stress = nh_coupled_stress(state, lame, Configuration::initial, form).tensor;
  return deformation_gradient(h) * stress.full();
}

inline std::array<double, 2> gauss_points() {
  const double g = 0.5 / std::sqrt(3.0);
  return {0.5 - g, 0.5 + g};
}

/// Internal force vector r_{a,i} = Σ_q w_q P_iJ(q) ∂N_a/∂X_J(q), 2x2x2 Gauss.
template <class S>
std::array<std::array<S, 3>, kNodes> internal_forces(const std::array<std::array<S, 3>, kNodes>& u,
                                                     const LameParams& lame, Form form) {
  const double weight = 0.125;
  std::array<std::array<S, 3>, kNodes> r;
  for (auto& ra : r) ra = {S(0), S(0), S(0)};

  for (double qx : gauss_points())
    for (double qy : gauss_points())
      for (double qz : gauss_points()) {
        const auto dn = shape_gradients({qx, qy, qz});
        const Mat3<S> p = first_piola(u, dn, lame, form);
        for (int a = 0; a < kNodes; ++a)
          for (int i = 0; i < 3; ++i) {
            S acc = p(i, 0) * S(dn[a][0]) + p(i, 1) * S(dn[a][1]) + p(i, 2) * S(dn[a][2]);
            r[a][i] += S(weight) * acc;
          }
      }
  return r;
}

/// Normal traction ∫ P_xx dA over the face x = face_x, 2x2 Gauss on the face.
inline double face_traction(const std::array<std::array<double, 3>, kNodes>& u, int face_x, const LameParams& lame,
                            Form form) {
  double total = 0;
  for (double qy : gauss_points())
    for (double qz : gauss_points())
      total += 0.25 * first_piola(u, shape_gradients({double(face_x), qy, qz}), lame, form)(0, 0);
  return total;
}

}  // namespace axial

NewtonReport run_axial(const AxialConfig& cfg);

}  // namespace stablestrain
