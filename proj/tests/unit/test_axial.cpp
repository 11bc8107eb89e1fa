#include <cmath>

#include "doctest.h"
#include "stablestrain/axial.hpp"

namespace ss = stablestrain;
using ss::Extended;

namespace {

const ss::LameParams kLame{4.0, 1.0};

// Lateral displacement eta solving S_yy = 0 for F = diag(1+eps, 1+eta, 1+eta),
// by scalar Newton in extended precision.
Extended lateral_displacement(double eps) {
  using D = ss::Dual<Extended, 1>;
  Extended eta = -0.4 * eps;  // small-strain guess -nu eps
  for (int it = 0; it < 50; ++it) {
    ss::Mat3<D> h = ss::Mat3<D>::zero();
    h(0, 0) = D(Extended(eps));
    h(1, 1) = h(2, 2) = D::variable(eta, 0);
    const auto s = ss::StrainState<D>::from_displacement_gradient(h);
    const D syy = ss::nh_coupled_stress(s, kLame, ss::Configuration::initial, ss::Form::stable).tensor(1, 1);
    const Extended step = syy.value / syy.grad[0];
    eta -= step;
    if (abs(step) <= 1e-30 * abs(eta)) break;
  }
  return eta;
}

}  // namespace

TEST_CASE("config validation") {
  ss::AxialConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.poisson = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.eps_axial = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.quadrature = "1x1x1";
  CHECK_THROWS_AS(ss::run_axial(cfg), std::invalid_argument);
  cfg = {};
  cfg.youngs = 0;
  CHECK_THROWS_AS(ss::run_axial(cfg), std::invalid_argument);
}

TEST_CASE("free DOF layout") {
  const auto dofs = ss::axial::free_dofs();
  for (int k = 0; k < 4; ++k) {
    CHECK(dofs[k][1] == 1);
    CHECK(ss::axial::node_coords(dofs[k][0])[1] == 1);
    CHECK(dofs[k + 4][1] == 2);
    CHECK(ss::axial::node_coords(dofs[k + 4][0])[2] == 1);
  }
}

TEST_CASE("zero displacement is already in equilibrium") {
  ss::AxialConfig cfg;
  cfg.eps_axial = 0;
  const auto r = ss::run_axial(cfg);
  CHECK(r.iterations() == 0);
  CHECK(r.residual_norms == std::vector<double>{0.0});
  CHECK(r.force_x0 == 0);
  CHECK(r.force_x1 == 0);
  CHECK(r.converged);
  for (double u : r.free_displacements) CHECK(u == 0);
}

TEST_CASE("unstable form at rest sees only the roundoff of sum x_a (x) grad N_a - I") {
  ss::AxialConfig cfg;
  cfg.eps_axial = 0;
  cfg.form = ss::Form::unstable;
  const auto r = ss::run_axial(cfg);
  CHECK(std::abs(r.force_x1) <= 1e-14);
  for (double u : r.free_displacements) CHECK(std::abs(u) <= 1e-14);
}

TEST_CASE("stable form: quadratic convergence and balanced forces") {
  const auto r = ss::run_axial({});
  CHECK(r.converged);
  CHECK(r.iterations() <= 2);
  CHECK(r.residual_norms.back() <= 1e-22);
  CHECK(r.force_x1 == doctest::Approx(-2.8e-12).epsilon(1e-3));
  CHECK(std::abs(r.force_x1 + 2.8e-12) <= 2.8e-15);
  CHECK(std::abs(r.force_imbalance) <= 1e-21);
  CHECK(r.force_imbalance == r.force_x1 + r.force_x0);
}

TEST_CASE("unstable form: stagnation and force imbalance") {
  ss::AxialConfig cfg;
  cfg.form = ss::Form::unstable;
  const auto r = ss::run_axial(cfg);
  CHECK_FALSE(r.converged);
  int plateau = 0;
  for (std::size_t k = 1; k < r.residual_norms.size(); ++k)
    if (r.residual_norms[k] >= 1e-18 && r.residual_norms[k] <= 1e-14) ++plateau;
  CHECK(plateau >= 2);
  CHECK(std::abs(r.force_imbalance) >= 1e-17);
  // about four correct digits
  const double err = std::abs(r.force_x1 + 2.8e-12) / 2.8e-12;
  CHECK(err > 1e-7);
  CHECK(err < 1e-2);
}

TEST_CASE("single-element solution is homogeneous") {
  for (double eps : {1e-12, 1e-6, 1e-3, -1e-3, 0.05}) {
    CAPTURE(eps);
    ss::AxialConfig cfg;
    cfg.eps_axial = eps;
    const auto r = ss::run_axial(cfg);
    REQUIRE(r.converged);
    const double eta = static_cast<double>(lateral_displacement(eps));
    for (double u : r.free_displacements) CHECK(u == doctest::Approx(eta).epsilon(1e-12));
  }
}

TEST_CASE("reaction force is +-E eps to first order") {
  for (double eps : {1e-6, 1e-9, -1e-7, -1e-12}) {
    CAPTURE(eps);
    ss::AxialConfig cfg;
    cfg.eps_axial = eps;
    const auto r = ss::run_axial(cfg);
    CHECK(std::abs(r.force_x1 + cfg.youngs * eps) <= 1e-2 * std::abs(cfg.youngs * eps));
    CHECK(std::abs(r.force_x0 - cfg.youngs * eps) <= 1e-2 * std::abs(cfg.youngs * eps));
  }
}

TEST_CASE("dual Jacobian matches finite differences of the residual") {
  const double eps = 1e-2;
  std::array<double, ss::axial::kFree> x{};
  for (int k = 0; k < ss::axial::kFree; ++k) x[k] = -1e-3 * (1 + 0.1 * k);
  const auto dofs = ss::axial::free_dofs();

  using D = ss::Dual<double, ss::axial::kFree>;
  std::array<D, ss::axial::kFree> xd;
  for (int k = 0; k < ss::axial::kFree; ++k) xd[k] = D::variable(x[k], static_cast<std::size_t>(k));
  const auto rd = ss::axial::internal_forces(ss::axial::nodal_displacements(eps, xd), kLame, ss::Form::stable);

  const double h = 1e-7;
  for (int j = 0; j < ss::axial::kFree; ++j) {
    auto xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    const auto rp = ss::axial::internal_forces(ss::axial::nodal_displacements(eps, xp), kLame, ss::Form::stable);
    const auto rm = ss::axial::internal_forces(ss::axial::nodal_displacements(eps, xm), kLame, ss::Form::stable);
    for (int i = 0; i < ss::axial::kFree; ++i) {
      const auto [a, c] = dofs[i];
      const double fd = (rp[a][c] - rm[a][c]) / (2 * h);
      CHECK(rd[a][c].grad[j] == doctest::Approx(fd).epsilon(1e-6).scale(1));
    }
  }
}

TEST_CASE("reports are deterministic") {
  ss::AxialConfig cfg;
  cfg.form = ss::Form::unstable;
  const auto a = ss::run_axial(cfg);
  const auto b = ss::run_axial(cfg);
  CHECK(a.residual_norms == b.residual_norms);
  CHECK(a.force_x1 == b.force_x1);
  CHECK(a.free_displacements == b.free_displacements);
}
