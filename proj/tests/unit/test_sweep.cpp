#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "stablestrain/sweep.hpp"

namespace ss = stablestrain;

namespace {

ss::SweepConfig small(ss::SweepModel m) {
  ss::SweepConfig cfg;
  cfg.model = m;
  cfg.samples = 8;
  cfg.directions = 4;
  return cfg;
}

}  // namespace

TEST_CASE("log_grid") {
  const auto g = ss::log_grid(1e-8, 1e-1, 50);
  REQUIRE(g.size() == 50);
  CHECK(g.front() == 1e-8);
  CHECK(g.back() == 1e-1);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  CHECK(g[7] == doctest::Approx(1e-7).epsilon(1e-14));
}

TEST_CASE("model names round trip") {
  for (const auto& name : ss::sweep_model_names()) {
    const auto m = ss::parse_sweep_model(name);
    REQUIRE(m.has_value());
    CHECK(ss::to_string(*m) == name);
  }
  CHECK_FALSE(ss::parse_sweep_model("neo-hookean").has_value());
}

TEST_CASE("config validation") {
  ss::SweepConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  auto bad = [](auto mutate) {
    ss::SweepConfig c;
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(bad([](auto& c) { c.eps_min = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.eps_max = 1; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.eps_min = 0.2; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.samples = 1; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.directions = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.series_order = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) { c.precision = ss::Precision::extended; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](auto& c) {
                    c.model = ss::SweepModel::ogden;
                    c.configuration = ss::Configuration::current;
                  }).validate(),
                  std::invalid_argument);
}

TEST_CASE("jm1 sweep reproduces the stable/unstable dichotomy") {
  ss::SweepConfig cfg;
  const ss::SweepTable t = ss::run_sweep(cfg);
  REQUIRE(t.rows.size() == 50);
  CHECK(t.columns == std::vector<std::string>{"eps", "rel_err_stable", "rel_err_unstable"});
  for (const auto& row : t.rows) CHECK(row[t.column("rel_err_stable")] <= 50 * ss::eps_machine<double>());
  CHECK(t.rows.front()[t.column("rel_err_unstable")] >= 1e-9);
  CHECK_THROWS(t.column("missing"));
}

TEST_CASE("energy sweeps report three forms") {
  for (auto m : {ss::SweepModel::nh_energy, ss::SweepModel::ad_stress}) {
    const auto t = ss::run_sweep(small(m));
    CHECK(t.columns == std::vector<std::string>{"eps", "rel_err_standard", "rel_err_semistable", "rel_err_stable"});
  }
  const auto t = ss::run_sweep(small(ss::SweepModel::nh_energy));
  CHECK(t.rows.front()[t.column("rel_err_standard")] > 1e-2);
}

TEST_CASE("every model sweeps in both precisions") {
  for (const auto& name : ss::sweep_model_names())
    for (auto p : {ss::Precision::single, ss::Precision::double_})
      for (auto c : {ss::Configuration::initial, ss::Configuration::current}) {
        auto cfg = small(*ss::parse_sweep_model(name));
        cfg.precision = p;
        cfg.configuration = c;
        if (cfg.model == ss::SweepModel::ogden && c == ss::Configuration::current) continue;
        CAPTURE(name);
        const auto t = ss::run_sweep(cfg);
        CHECK(t.rows.size() == 8);
        for (const auto& row : t.rows)
          for (double v : row) CHECK(std::isfinite(v));
      }
}

TEST_CASE("sweeps are deterministic and seed dependent") {
  auto cfg = small(ss::SweepModel::nh_coupled);
  const auto a = ss::run_sweep(cfg);
  const auto b = ss::run_sweep(cfg);
  CHECK(a.rows == b.rows);
  cfg.seed = 2;
  CHECK(ss::run_sweep(cfg).rows != a.rows);
}

TEST_CASE("CSV output") {
  ss::SweepTable t;
  t.columns = {"eps", "rel_err_stable", "rel_err_unstable"};
  t.rows = {{1e-8, 0.1, std::nan("")}, {0.5, 1.0 / 3, 2.5e-300}};
  std::ostringstream os;
  ss::write_csv(t, os);
  CHECK(os.str() ==
        "eps,rel_err_stable,rel_err_unstable\n"
        "1e-08,0.1,nan\n"
        "0.5,0.3333333333333333,2.5e-300\n");
  CHECK(std::stod(ss::format_double(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("SVG output") {
  const auto t = ss::run_sweep(small(ss::SweepModel::jm1));
  std::ostringstream os;
  ss::write_svg(t, "jm1 (double)", os);
  const std::string svg = os.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("rel_err_unstable") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
}
