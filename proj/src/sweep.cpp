#include "stablestrain/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "stablestrain/autodiff.hpp"
#include "stablestrain/kinematics.hpp"
#include "stablestrain/oracle.hpp"
#include "stablestrain/spectral.hpp"

namespace stablestrain {

namespace {

struct ModelName {
  SweepModel model;
  const char* name;
};

constexpr ModelName kModels[] = {
    {SweepModel::jm1, "jm1"},
    {SweepModel::strain, "strain"},
    {SweepModel::nh_coupled, "nh-coupled"},
    {SweepModel::mr_coupled, "mr-coupled"},
    {SweepModel::nh_iso, "nh-iso"},
    {SweepModel::mr_iso, "mr-iso"},
    {SweepModel::ogden, "ogden"},
    {SweepModel::hencky, "hencky"},
    {SweepModel::nh_energy, "nh-energy"},
    {SweepModel::ad_stress, "ad-stress"},
    {SweepModel::log1pmx, "log1pmx"},
};

bool three_energy_forms(SweepModel m) { return m == SweepModel::nh_energy || m == SweepModel::ad_stress; }

// Wraps a per-form quantity so rel_error sees a generic callable of H.
template <class Fn>
auto at_form(Fn fn, Form form) {
  return [fn, form](const auto& h) { return fn(h, form); };
}

template <RealScalar T>
double guarded(auto&& thunk) {
  try {
    return thunk();
  } catch (const UndefinedRelativeError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

template <RealScalar T>
std::vector<double> point_errors(const SweepConfig& cfg, const SweepMaterials& mat, const Mat3<double>& dir,
                                 double eps) {
  const Configuration config = cfg.configuration;
  const SeriesOrder order(cfg.series_order);

  auto two_forms = [&](auto fn) {
    return std::vector<double>{
        guarded<T>([&] { return rel_error<T>(at_form(fn, Form::stable), dir, eps); }),
        guarded<T>([&] { return rel_error<T>(at_form(fn, Form::unstable), dir, eps); })};
  };
  auto state_of = [](const auto& h) {
    using S = std::decay_t<decltype(h(0, 0))>;
    return StrainState<S>::from_displacement_gradient(h);
  };

  switch (cfg.model) {
    case SweepModel::jm1:
      return two_forms([](const auto& h, Form f) { return f == Form::stable ? jm1(h) : jm1_unstable(h); });
    case SweepModel::strain:
      return two_forms([config](const auto& h, Form f) {
        if (config == Configuration::initial)
          return f == Form::stable ? green_lagrange(h) : green_lagrange_unstable(h);
        return f == Form::stable ? green_euler(h) : green_euler_unstable(h);
      });
    case SweepModel::nh_coupled:
      return two_forms([&](const auto& h, Form f) { return nh_coupled_stress(state_of(h), mat.lame, config, f).tensor; });
    case SweepModel::mr_coupled:
      return two_forms(
          [&](const auto& h, Form f) { return mr_coupled_stress(state_of(h), mat.mooney_rivlin, config, f).tensor; });
    case SweepModel::nh_iso:
      return two_forms([&](const auto& h, Form f) { return nh_iso_stress(state_of(h), mat.iso_mu, config, f).tensor; });
    case SweepModel::mr_iso:
      return two_forms(
          [&](const auto& h, Form f) { return mr_iso_stress(state_of(h), mat.mooney_rivlin, config, f).tensor; });
    case SweepModel::ogden:
      return two_forms([&](const auto& h, Form f) {
        const auto s = state_of(h);
        return ogden_iso_stress(eig_sym3(s.green_lagrange), s.jm1, mat.ogden, f).tensor;
      });
    case SweepModel::hencky: {
      const StrainConfiguration sc =
          config == Configuration::initial ? StrainConfiguration::material : StrainConfiguration::spatial;
      return two_forms([&, sc](const auto& h, Form f) { return hencky_strain(state_of(h), sc, f); });
    }
    case SweepModel::nh_energy: {
      std::vector<double> out;
      for (EnergyForm ef : {EnergyForm::standard, EnergyForm::semistable, EnergyForm::stable})
        out.push_back(guarded<T>([&] {
          return rel_error<T>([&](const auto& h) { return nh_energy(green_lagrange(h), mat.lame, ef, order); }, dir,
                              eps);
        }));
      return out;
    }
    case SweepModel::ad_stress: {
      auto reference = [&](const auto& h) {
        return nh_coupled_stress(state_of(h), mat.lame, Configuration::initial, Form::stable).tensor;
      };
      std::vector<double> out;
      for (EnergyForm ef : {EnergyForm::standard, EnergyForm::semistable, EnergyForm::stable}) {
        auto ad = [&](const auto& h) {
          return grad_energy([&](const auto& e) { return nh_energy(e, mat.lame, ef, order); }, green_lagrange(h));
        };
        out.push_back(guarded<T>([&] { return rel_error<T>(ad, reference, dir, eps); }));
      }
      return out;
    }
    case SweepModel::log1pmx: {
      const T x = static_cast<T>(eps);
      const Extended ref = log1pmx(static_cast<Extended>(x));
      auto err = [&](T v) { return static_cast<double>(abs(static_cast<Extended>(v) - ref) / abs(ref)); };
      using std::log1p;
      return {err(log1pmx(x, order)), err(log1p(x) - x)};
    }
  }
  throw std::logic_error("point_errors: unknown model");
}

double median(std::vector<double> v) {
  std::erase_if(v, [](double x) { return std::isnan(x); });
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <RealScalar T>
SweepTable run_sweep_in(const SweepConfig& cfg, const SweepMaterials& mat) {
  SweepTable table;
  table.columns.push_back("eps");
  if (three_energy_forms(cfg.model))
    table.columns.insert(table.columns.end(), {"rel_err_standard", "rel_err_semistable", "rel_err_stable"});
  else
    table.columns.insert(table.columns.end(), {"rel_err_stable", "rel_err_unstable"});

  const int directions = cfg.model == SweepModel::log1pmx ? 1 : cfg.directions;
  std::vector<Mat3<double>> dirs;
  for (int d = 0; d < directions; ++d) dirs.push_back(sample_direction(cfg.seed, static_cast<std::uint64_t>(d)));

  for (double eps : log_grid(cfg.eps_min, cfg.eps_max, cfg.samples)) {
    const std::size_t ncols = table.columns.size() - 1;
    std::vector<std::vector<double>> per_col(ncols);
    for (const auto& dir : dirs) {
      const std::vector<double> errs = point_errors<T>(cfg, mat, dir, eps);
      for (std::size_t c = 0; c < ncols; ++c) per_col[c].push_back(errs[c]);
    }
    std::vector<double> row{eps};
    for (auto& col : per_col) row.push_back(median(std::move(col)));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

const std::vector<std::string>& sweep_model_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& m : kModels) n.emplace_back(m.name);
    return n;
  }();
  return names;
}

std::optional<SweepModel> parse_sweep_model(std::string_view name) {
  for (const auto& m : kModels)
    if (name == m.name) return m.model;
  return std::nullopt;
}

std::string to_string(SweepModel model) {
  for (const auto& m : kModels)
    if (m.model == model) return m.name;
  return "?";
}

void SweepConfig::validate() const {
  if (!(eps_min > 0 && eps_min < eps_max && eps_max < 1))
    throw std::invalid_argument("sweep: need 0 < eps-min < eps-max < 1");
  if (samples < 2) throw std::invalid_argument("sweep: samples must be >= 2");
  if (directions < 1) throw std::invalid_argument("sweep: directions must be >= 1");
  if (series_order < 1) throw std::invalid_argument("sweep: series-order must be >= 1");
  if (precision == Precision::extended) throw std::invalid_argument("sweep: precision must be single or double");
  if (model == SweepModel::ogden && configuration == Configuration::current)
    throw std::invalid_argument("sweep: ogden is defined in the initial configuration only");
}

std::size_t SweepTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw std::out_of_range("SweepTable: no column " + std::string(name));
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int k = 0; k < n; ++k) grid[k] = std::pow(10.0, a + (b - a) * k / (n - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

SweepTable run_sweep(const SweepConfig& cfg, const SweepMaterials& materials) {
  cfg.validate();
  if (cfg.precision == Precision::single) return run_sweep_in<float>(cfg, materials);
  return run_sweep_in<double>(cfg, materials);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(const SweepTable& table, std::ostream& os) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
    os << '\n';
  }
}

}  // namespace stablestrain
