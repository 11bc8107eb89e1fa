#include "stablestrain/axial.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace stablestrain {

namespace axial {

std::array<std::array<int, 2>, kFree> free_dofs() {
  std::array<std::array<int, 2>, kFree> dofs{};
  int k = 0;
  for (int a = 0; a < kNodes; ++a)
    if (node_coords(a)[1] == 1) dofs[k++] = {a, 1};
  for (int a = 0; a < kNodes; ++a)
    if (node_coords(a)[2] == 1) dofs[k++] = {a, 2};
  return dofs;
}

}  // namespace axial

namespace {

// Converged when the residual drops below this fraction of the initial one.
constexpr double kRelativeTolerance = 1e-10;
// Stagnation: the residual failed to decrease by at least 10%.
constexpr double kStagnationRatio = 0.9;

struct Residual {
  std::array<std::array<double, 3>, axial::kNodes> forces;
  Eigen::Matrix<double, axial::kFree, 1> free;
};

Residual evaluate(const AxialConfig& cfg, const LameParams& lame, const std::array<double, axial::kFree>& x) {
  Residual r;
  r.forces = axial::internal_forces(axial::nodal_displacements(cfg.eps_axial, x), lame, cfg.form);
  const auto dofs = axial::free_dofs();
  for (int k = 0; k < axial::kFree; ++k) r.free(k) = r.forces[dofs[k][0]][dofs[k][1]];
  return r;
}

// Jacobian of the stable residual with respect to the free DOFs.
Eigen::Matrix<double, axial::kFree, axial::kFree> jacobian(const AxialConfig& cfg, const LameParams& lame,
                                                           const std::array<double, axial::kFree>& x) {
  using D = Dual<double, axial::kFree>;
  std::array<D, axial::kFree> xd;
  for (int k = 0; k < axial::kFree; ++k) xd[k] = D::variable(x[k], static_cast<std::size_t>(k));
  const auto forces = axial::internal_forces(axial::nodal_displacements(cfg.eps_axial, xd), lame, Form::stable);
  const auto dofs = axial::free_dofs();
  Eigen::Matrix<double, axial::kFree, axial::kFree> jac;
  for (int i = 0; i < axial::kFree; ++i)
    for (int j = 0; j < axial::kFree; ++j) jac(i, j) = forces[dofs[i][0]][dofs[i][1]].grad[j];
  return jac;
}

}  // namespace

void AxialConfig::validate() const {
  if (!(youngs > 0)) throw std::invalid_argument("axial: Young's modulus must be > 0");
  if (!(poisson > -1 && poisson < 0.5)) throw std::invalid_argument("axial: Poisson ratio must be in (-1, 0.5)");
  if (!(eps_axial > -1)) throw std::invalid_argument("axial: eps must be > -1");
  if (max_newton < 0) throw std::invalid_argument("axial: max-newton must be >= 0");
  if (quadrature != "2x2x2") throw std::invalid_argument("axial: only 2x2x2 quadrature is supported");
}

NewtonReport run_axial(const AxialConfig& cfg) {
  cfg.validate();
  const ElasticModuli moduli = from_youngs(cfg.youngs, cfg.poisson);
  const LameParams lame{moduli.lambda, moduli.mu};

  NewtonReport report;
  std::array<double, axial::kFree> x{};
  Residual r = evaluate(cfg, lame, x);
  report.residual_norms.push_back(r.free.norm());
  const double norm0 = report.residual_norms.front();

  for (int it = 0; it < cfg.max_newton; ++it) {
    const double current = report.residual_norms.back();
    if (current == 0 || current <= kRelativeTolerance * norm0) {
      report.converged = true;
      break;
    }
    if (it > 0 && current > kStagnationRatio * report.residual_norms[report.residual_norms.size() - 2]) break;

    const Eigen::FullPivLU<Eigen::Matrix<double, axial::kFree, axial::kFree>> lu(jacobian(cfg, lame, x));
    if (!lu.isInvertible()) throw std::runtime_error("axial: singular Jacobian");
    const Eigen::Matrix<double, axial::kFree, 1> step = lu.solve(-r.free);
    for (int k = 0; k < axial::kFree; ++k) x[k] += step(k);
    r = evaluate(cfg, lame, x);
    report.residual_norms.push_back(r.free.norm());
  }
  if (!report.converged) {
    const double last = report.residual_norms.back();
    report.converged = last == 0 || last <= kRelativeTolerance * norm0;
  }

  // Reactions from the face tractions: the nodal x-residuals sum to zero on a
  // single element by partition of unity, so they cannot expose the
  // face-to-face imbalance a non-affine (noisy) solution produces.
  const auto u = axial::nodal_displacements(cfg.eps_axial, x);
  report.force_x1 = -axial::face_traction(u, 1, lame, cfg.form);
  report.force_x0 = axial::face_traction(u, 0, lame, cfg.form);
  report.force_imbalance = report.force_x1 + report.force_x0;
  report.free_displacements = x;
  return report;
}

}  // namespace stablestrain
