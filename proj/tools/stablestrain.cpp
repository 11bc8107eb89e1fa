// Command-line harness: `sweep` writes relative-error curves as CSV (and
// optionally SVG); `axial` runs the single-element Newton test.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stablestrain/axial.hpp"
#include "stablestrain/sweep.hpp"

namespace ss = stablestrain;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STABLESTRAIN_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("STABLESTRAIN_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

int run_sweep_command(const ss::SweepConfig& cfg, const std::string& output, const std::string& svg) {
  const ss::SweepTable table = ss::run_sweep(cfg);
  if (output.empty() || output == "-") {
    ss::write_csv(table, std::cout);
  } else {
    std::ofstream os(output);
    if (!os) throw std::runtime_error("cannot open output file: " + output);
    ss::write_csv(table, os);
    if (!os) throw std::runtime_error("failed writing output file: " + output);
  }
  if (!svg.empty()) {
    std::ofstream os(svg);
    if (!os) throw std::runtime_error("cannot open svg file: " + svg);
    std::ostringstream title;
    title << ss::to_string(cfg.model) << " (" << ss::to_string(cfg.precision) << ")";
    ss::write_svg(table, title.str(), os);
  }
  return 0;
}

void print_report(const ss::NewtonReport& r, std::ostream& os) {
  os << std::scientific << std::setprecision(12);
  os << "iteration  residual_norm\n";
  for (std::size_t i = 0; i < r.residual_norms.size(); ++i)
    os << std::setw(9) << i << "  " << r.residual_norms[i] << "\n";
  os << "force_x1         " << r.force_x1 << "\n";
  os << "force_x0         " << r.force_x0 << "\n";
  os << "force_imbalance  " << r.force_imbalance << "\n";
  os << "converged        " << (r.converged ? "yes" : "no") << "\n";
}

nlohmann::json report_json(const ss::AxialConfig& cfg, const ss::NewtonReport& r) {
  return {{"youngs", cfg.youngs},
          {"poisson", cfg.poisson},
          {"eps_axial", cfg.eps_axial},
          {"form", cfg.form == ss::Form::stable ? "stable" : "unstable"},
          {"residual_norms", r.residual_norms},
          {"force_x0", r.force_x0},
          {"force_x1", r.force_x1},
          {"force_imbalance", r.force_imbalance},
          {"converged", r.converged},
          {"free_displacements", r.free_displacements}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable finite-strain kernel harness"};
  app.require_subcommand(1);

  ss::SweepConfig sweep;
  std::string model_name = "jm1", configuration = "initial", precision = "double";
  std::string output, svg;
  std::uint64_t seed = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Relative error vs strain magnitude, written as CSV");
  sweep_cmd->add_option("--model", model_name, "Quantity to sweep")
      ->check(CLI::IsMember(ss::sweep_model_names()))
      ->capture_default_str();
  sweep_cmd->add_option("--configuration", configuration, "initial (S, material) or current (tau, spatial)")
      ->check(CLI::IsMember({"initial", "current"}))
      ->capture_default_str();
  sweep_cmd->add_option("--precision", precision, "Precision under test")
      ->check(CLI::IsMember({"single", "double"}))
      ->capture_default_str();
  sweep_cmd->add_option("--eps-min", sweep.eps_min, "Smallest strain scale")->capture_default_str();
  sweep_cmd->add_option("--eps-max", sweep.eps_max, "Largest strain scale")->capture_default_str();
  sweep_cmd->add_option("--samples", sweep.samples, "Number of log-spaced grid points")->capture_default_str();
  sweep_cmd->add_option("--directions", sweep.directions, "Random directions per grid point (median reported)")
      ->capture_default_str();
  auto* seed_opt = sweep_cmd->add_option("--seed", seed, "PRNG seed (default: $STABLESTRAIN_SEED or 1)");
  sweep_cmd->add_option("--series-order", sweep.series_order, "Terms of the log1pmx series")->capture_default_str();
  sweep_cmd->add_option("--output,-o", output, "CSV output path ('-' or empty for stdout)");
  sweep_cmd->add_option("--svg", svg, "Also write a log-log SVG plot to this path");

  ss::AxialConfig axial;
  std::string form = "stable", json_path;
  auto* axial_cmd = app.add_subcommand("axial", "Single-element axial tension/compression Newton test");
  axial_cmd->add_option("--youngs", axial.youngs, "Young's modulus")->capture_default_str();
  axial_cmd->add_option("--poisson", axial.poisson, "Poisson ratio")->capture_default_str();
  axial_cmd->add_option("--eps-axial", axial.eps_axial, "Prescribed axial displacement of the x = 1 face")
      ->capture_default_str();
  axial_cmd->add_option("--form", form, "Residual stress form")
      ->check(CLI::IsMember({"stable", "unstable"}))
      ->capture_default_str();
  axial_cmd->add_option("--max-newton", axial.max_newton, "Maximum Newton iterations")->capture_default_str();
  axial_cmd->add_option("--quadrature", axial.quadrature, "Quadrature rule")
      ->check(CLI::IsMember({"2x2x2"}))
      ->capture_default_str();
  axial_cmd->add_option("--json", json_path, "Also write the report as JSON to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sweep_cmd) {
      sweep.model = *ss::parse_sweep_model(model_name);
      sweep.configuration = configuration == "current" ? ss::Configuration::current : ss::Configuration::initial;
      sweep.precision = precision == "single" ? ss::Precision::single : ss::Precision::double_;
      sweep.seed = seed_opt->count() ? seed : default_seed();
      try {
        sweep.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return run_sweep_command(sweep, output, svg);
    }
    axial.form = form == "unstable" ? ss::Form::unstable : ss::Form::stable;
    try {
      axial.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const ss::NewtonReport report = ss::run_axial(axial);
    print_report(report, std::cout);
    if (!json_path.empty()) {
      std::ofstream os(json_path);
      if (!os) throw std::runtime_error("cannot open json file: " + json_path);
      os << report_json(axial, report).dump(2) << "\n";
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
