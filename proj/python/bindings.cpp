#include <sstream>
#include <stdexcept>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stablestrain/axial.hpp"
#include "stablestrain/constitutive.hpp"
#include "stablestrain/errors.hpp"
#include "stablestrain/kinematics.hpp"
#include "stablestrain/scalar_kernels.hpp"
#include "stablestrain/sweep.hpp"

namespace py = pybind11;
namespace ss = stablestrain;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

ss::Mat3<double> to_mat(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != 3 || a.shape(1) != 3) throw std::invalid_argument("expected a 3x3 array");
  ss::Mat3<double> m;
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < 3; ++i)
    for (py::ssize_t j = 0; j < 3; ++j) m(i, j) = r(i, j);
  return m;
}

Array to_array(const ss::SymTensor3<double>& s) {
  Array out({3, 3});
  auto w = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < 3; ++i)
    for (py::ssize_t j = 0; j < 3; ++j) w(i, j) = s(i, j);
  return out;
}

ss::Form parse_form(const std::string& s) {
  if (s == "stable") return ss::Form::stable;
  if (s == "unstable") return ss::Form::unstable;
  throw std::invalid_argument("form must be 'stable' or 'unstable'");
}

ss::Configuration parse_configuration(const std::string& s) {
  if (s == "initial") return ss::Configuration::initial;
  if (s == "current") return ss::Configuration::current;
  throw std::invalid_argument("configuration must be 'initial' or 'current'");
}

ss::SweepConfig make_sweep(const std::string& model, const std::string& configuration, const std::string& precision,
                           double eps_min, double eps_max, int samples, int directions, std::uint64_t seed,
                           int series_order) {
  ss::SweepConfig cfg;
  const auto m = ss::parse_sweep_model(model);
  if (!m) throw std::invalid_argument("unknown model '" + model + "'");
  cfg.model = *m;
  cfg.configuration = parse_configuration(configuration);
  if (precision == "single") cfg.precision = ss::Precision::single;
  else if (precision == "double") cfg.precision = ss::Precision::double_;
  else throw std::invalid_argument("precision must be 'single' or 'double'");
  cfg.eps_min = eps_min;
  cfg.eps_max = eps_max;
  cfg.samples = samples;
  cfg.directions = directions;
  cfg.seed = seed;
  cfg.series_order = series_order;
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Floating-point stable finite-strain kinematics and hyperelastic stresses";

  py::register_exception<ss::InadmissibleState>(m, "InadmissibleState", PyExc_ValueError);

  m.def("log1pmx", [](double x, int order) { return ss::log1pmx(x, ss::SeriesOrder(order)); }, py::arg("x"),
        py::arg("order") = ss::SeriesOrder::kDefault, "log(1+x) - x without cancellation");
  m.def("expm1mx", [](double x) { return ss::expm1mx(x); }, py::arg("x"), "exp(x) - 1 - x without cancellation");

  m.def("jm1", [](const Array& h, const std::string& form) {
        const auto hm = to_mat(h);
        return parse_form(form) == ss::Form::stable ? ss::jm1(hm) : ss::jm1_unstable(hm);
      }, py::arg("h"), py::arg("form") = "stable", "det(I + H) - 1");
  m.def("green_lagrange", [](const Array& h, const std::string& form) {
        const auto hm = to_mat(h);
        return to_array(parse_form(form) == ss::Form::stable ? ss::green_lagrange(hm) : ss::green_lagrange_unstable(hm));
      }, py::arg("h"), py::arg("form") = "stable");
  m.def("green_euler", [](const Array& h, const std::string& form) {
        const auto hm = to_mat(h);
        return to_array(parse_form(form) == ss::Form::stable ? ss::green_euler(hm) : ss::green_euler_unstable(hm));
      }, py::arg("h"), py::arg("form") = "stable");

  m.def("neo_hookean_stress", [](const Array& h, double lam, double mu, const std::string& configuration,
                                 const std::string& form) {
        ss::LameParams p{lam, mu};
        p.validate();
        const auto s = ss::StrainState<double>::from_displacement_gradient(to_mat(h));
        return to_array(ss::nh_coupled_stress(s, p, parse_configuration(configuration), parse_form(form)).tensor);
      }, py::arg("h"), py::arg("lam"), py::arg("mu"), py::arg("configuration") = "initial", py::arg("form") = "stable",
      "Coupled Neo-Hookean S (initial) or tau (current)");
  m.def("mooney_rivlin_stress", [](const Array& h, double lam, double mu1, double mu2, const std::string& configuration,
                                   const std::string& form) {
        ss::MooneyRivlinParams p{lam, mu1, mu2};
        p.validate();
        const auto s = ss::StrainState<double>::from_displacement_gradient(to_mat(h));
        return to_array(ss::mr_coupled_stress(s, p, parse_configuration(configuration), parse_form(form)).tensor);
      }, py::arg("h"), py::arg("lam"), py::arg("mu1"), py::arg("mu2"), py::arg("configuration") = "initial",
      py::arg("form") = "stable");

  m.def("sweep_models", &ss::sweep_model_names);
  m.def("sweep", [](const std::string& model, const std::string& configuration, const std::string& precision,
                    double eps_min, double eps_max, int samples, int directions, std::uint64_t seed, int series_order) {
        const auto table = ss::run_sweep(
            make_sweep(model, configuration, precision, eps_min, eps_max, samples, directions, seed, series_order));
        py::dict out;
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
          py::list col;
          for (const auto& row : table.rows) col.append(row[c]);
          out[py::str(table.columns[c])] = col;
        }
        return out;
      }, py::arg("model") = "jm1", py::arg("configuration") = "initial", py::arg("precision") = "double",
      py::arg("eps_min") = 1e-8, py::arg("eps_max") = 1e-1, py::arg("samples") = 50, py::arg("directions") = 16,
      py::arg("seed") = 1, py::arg("series_order") = ss::SeriesOrder::kDefault,
      "Median relative error per strain scale, as {column: values}");

  m.def("axial", [](double youngs, double poisson, double eps_axial, const std::string& form, int max_newton) {
        ss::AxialConfig cfg;
        cfg.youngs = youngs;
        cfg.poisson = poisson;
        cfg.eps_axial = eps_axial;
        cfg.form = parse_form(form);
        cfg.max_newton = max_newton;
        const auto r = ss::run_axial(cfg);
        py::dict out;
        out["residual_norms"] = r.residual_norms;
        out["force_x0"] = r.force_x0;
        out["force_x1"] = r.force_x1;
        out["force_imbalance"] = r.force_imbalance;
        out["converged"] = r.converged;
        out["free_displacements"] = std::vector<double>(r.free_displacements.begin(), r.free_displacements.end());
        return out;
      }, py::arg("youngs") = 2.8, py::arg("poisson") = 0.4, py::arg("eps_axial") = 1e-12, py::arg("form") = "stable",
      py::arg("max_newton") = 10, "Single-element axial test solved by Newton's method");
}
