#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stablestrain/constitutive.hpp"
#include "stablestrain/precision.hpp"

namespace stablestrain {

enum class SweepModel {
  jm1,
  strain,
  nh_coupled,
  mr_coupled,
  nh_iso,
  mr_iso,
  ogden,
  hencky,
  nh_energy,
  ad_stress,
  log1pmx,
};

const std::vector<std::string>& sweep_model_names();
std::optional<SweepModel> parse_sweep_model(std::string_view name);
std::string to_string(SweepModel m);

struct SweepConfig {
  SweepModel model = SweepModel::jm1;
  Configuration configuration = Configuration::initial;
  Precision precision = Precision::double_;
  double eps_min = 1e-8;
  double eps_max = 1e-1;
  int samples = 50;
  int directions = 16;
  std::uint64_t seed = 1;
  int series_order = SeriesOrder::kDefault;

  /// Throws std::invalid_argument on an invalid combination.
  void validate() const;
};

/// Material parameters used by the sweeps.
struct SweepMaterials {
  LameParams lame{4.0, 1.0};  // E = 2.8, nu = 0.4
  MooneyRivlinParams mooney_rivlin{4.0, 0.5, 0.5};
  double iso_mu = 1.0;
  OgdenParams ogden{14.0 / 3.0, {{1.2, 1.7}, {-0.4, -1.1}}};
};

/// One row per grid point: eps followed by the median relative error of each
/// form across the sampled directions.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of the named column; throws if absent.
  std::size_t column(std::string_view name) const;
};

/// Log-spaced grid with exact endpoints.
std::vector<double> log_grid(double lo, double hi, int n);

SweepTable run_sweep(const SweepConfig& cfg, const SweepMaterials& materials = {});

/// Header row then one line per grid point, shortest round-trip formatting.
void write_csv(const SweepTable& table, std::ostream& os);

/// Log-log line plot of every error column against eps.
void write_svg(const SweepTable& table, const std::string& title, std::ostream& os);

/// Formats a double as the shortest string that round-trips.
std::string format_double(double v);

}  // namespace stablestrain
