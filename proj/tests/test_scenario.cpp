#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trapdirac/config.hpp"
#include "trapdirac/output.hpp"
#include "trapdirac/scenario.hpp"

using namespace trapdirac;
using C = std::complex<double>;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("trapdirac_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

ScenarioConfig short_run(std::string state, double m, std::vector<Observable> obs, std::size_t steps = 200) {
  ScenarioConfig c;
  c.state = std::move(state);
  c.m_over_p = m;
  c.observables = std::move(obs);
  c.steps = steps;
  return c;
}

}  // namespace

TEST_CASE("preset states") {
  const auto cat = preset_state("cat");
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool corner = (r == 0 || r == 3) && (c == 0 || c == 3);
      CHECK(std::abs(cat(r, c) - C(corner ? 0.5 : 0.0)) < 1e-15);
    }
  const auto w = preset_state("werner");
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool inner = (r == 1 || r == 2) && (c == 1 || c == 2);
      CHECK(std::abs(w(r, c) - C(inner ? 0.5 : 0.0)) < 1e-15);
    }
  CHECK(preset_state("basis(a)").matrix() == QMatrix::diagonal({C(1), C(0), C(0), C(0)}));
  CHECK(preset_state("basis(d)").matrix() == QMatrix::diagonal({C(0), C(0), C(0), C(1)}));
  CHECK_THROWS_AS(preset_state("ghz"), InputError);
  CHECK_THROWS_AS(preset_state("basis(e)"), InputError);

  ScenarioConfig custom;
  custom.state = "custom";
  custom.psi = {C(0), C(3), C(0, 4), C(0)};
  const auto rho = initial_state(custom);
  CHECK(rho(1, 1).real() == doctest::Approx(9.0 / 25));
  CHECK(rho(2, 2).real() == doctest::Approx(16.0 / 25));
}

TEST_CASE("config validation and parsing") {
  CHECK_NOTHROW(ScenarioConfig{}.validate());
  ScenarioConfig bad;
  bad.steps = 1;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = ScenarioConfig{};
  bad.t_max = 0;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = ScenarioConfig{};
  bad.discord_side = 3;
  CHECK_THROWS_AS(bad.validate(), InputError);

  const auto cfg = parse_config(
      "# figure 3 heavy mass\n"
      "state = cat\n"
      "m_over_p = 20\n"
      "observables = discord, discord_derivative\n"
      "picture_sign = paper_literal\n"
      "\n"
      "steps = 300\n");
  CHECK(cfg.m_over_p == 20);
  CHECK(cfg.steps == 300);
  CHECK(cfg.observables == std::vector<Observable>{Observable::discord, Observable::discord_derivative});
  CHECK(cfg.picture_sign == PictureSign::paper_literal);
  CHECK(cfg.gamma_over_p == 0.5);

  CHECK_THROWS_AS(parse_config("colour = red\n"), InputError);
  CHECK_THROWS_AS(parse_config("m_over_p = 1.0x\n"), InputError);
  CHECK_THROWS_AS(parse_config("observables = survival,entropy\n"), InputError);
  CHECK_THROWS_AS(parse_config("steps = -4\n"), InputError);
  CHECK_THROWS_AS(load_config("/nonexistent/dir/run.cfg"), IoError);

  CHECK(parse_real(format_real(0.1), "x") == 0.1);
  CHECK(parse_real(format_real(std::numbers::pi / 4), "x") == std::numbers::pi / 4);
  CHECK(split_list(" a, b ,c") == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(split_list("a,,b"), InputError);
}

TEST_CASE("config round trip") {
  ScenarioConfig c;
  c.state = "custom";
  c.psi = {C(0.1, -0.2), C(1.0 / 3), C(0), C(0, 2.5e-7)};
  c.m_over_p = 1.0 / 7;
  c.e_over_p = 2.25;
  c.gamma_over_p = 0.123456789012345;
  c.kappa = -0.75;
  c.mu = 1e-3;
  c.theta = 1.1;
  c.t_max = 12.5;
  c.steps = 321;
  c.observables = {Observable::purity, Observable::populations, Observable::negativity};
  c.discord_side = 2;
  c.picture_sign = PictureSign::paper_literal;
  c.precision = Precision::quad;
  CHECK(parse_config(to_text(c)) == c);

  RunResult r = run_scenario(short_run("werner", 1, {Observable::survival, Observable::discord}, 50));
  CHECK(parse_config(metadata_text(r)) == r.config);
}

TEST_CASE("run_scenario") {
  const auto r = run_scenario(short_run("cat", 0, {Observable::survival}, 2000));
  const auto& s = r.at("survival");
  CHECK(s.size() == 2000);
  CHECK(s.times.front() == 0);
  CHECK(s.times.back() == doctest::Approx(50));
  CHECK(s.values[0] == doctest::Approx(1).epsilon(1e-12));
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s.values[i] < 1.0);
  CHECK_THROWS_AS(r.at("negativity"), InputError);

  const double r5 = std::sqrt(5.0);
  CHECK(r.metadata.lambdas[0] == doctest::Approx(r5));
  CHECK(r.metadata.lambdas[1] == doctest::Approx(1));
  CHECK(r.metadata.lambdas[2] == doctest::Approx(-r5));
  CHECK(r.metadata.lambdas[3] == doctest::Approx(-1));
  CHECK(r.metadata.c1 == doctest::Approx(3));
  CHECK(r.metadata.c2 == doctest::Approx(1));
  CHECK(r.metadata.version == kVersion);

  auto noisy = short_run("werner", 1, {Observable::negativity});
  auto clean = noisy;
  clean.gamma_over_p = 0;
  const auto a = run_scenario(noisy).at("negativity");
  const auto b = run_scenario(clean).at("negativity");
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a.values[i] - b.values[i]) < 1e-10);

  const auto pops = run_scenario(short_run("basis(b)", 1, {Observable::populations}, 50));
  REQUIRE(pops.series.size() == 4);
  CHECK(pops.series[0].label == "population_a");
  CHECK(pops.series[3].label == "population_d");
  for (std::size_t i = 0; i < 50; ++i) {
    double total = 0;
    for (const auto& ser : pops.series) total += ser.values[i];
    CHECK(total == doctest::Approx(1).epsilon(1e-12));
  }

  // Series follow the requested order.
  const auto order = run_scenario(short_run("cat", 1, {Observable::purity, Observable::survival}, 20));
  CHECK(order.series[0].label == "purity");
  CHECK(order.series[1].label == "survival");

  auto degenerate = short_run("cat", 1, {Observable::survival});
  degenerate.e_over_p = 0;
  try {
    run_scenario(degenerate);
    FAIL("expected DegenerateSpectrum");
  } catch (const DegenerateSpectrum& e) {
    CHECK(std::string(e.what()).find("E/p=0") != std::string::npos);
  }
}

TEST_CASE("discord cusp at heavy mass") {
  const auto heavy = run_scenario(short_run("cat", 20, {Observable::discord, Observable::discord_derivative}, 10000));
  REQUIRE(heavy.cusps.has_value());
  CHECK_FALSE(heavy.cusps->empty());
  CHECK(heavy.at("discord_derivative").size() == 10000);

  const auto light = run_scenario(short_run("cat", 0, {Observable::discord, Observable::discord_derivative}, 10000));
  REQUIRE(light.cusps.has_value());
  CHECK(light.cusps->empty());
  REQUIRE(light.metadata.discord_side_asymmetry.has_value());
}

TEST_CASE("binary128 runs agree with double") {
  auto cfg = short_run("cat", 10, {Observable::survival, Observable::negativity, Observable::discord}, 100);
  const auto lo = run_scenario(cfg);
  cfg.precision = Precision::quad;
  const auto hi = run_scenario(cfg);
  for (std::size_t k = 0; k < lo.series.size(); ++k)
    for (std::size_t i = 0; i < 100; ++i) CHECK(std::abs(lo.series[k].values[i] - hi.series[k].values[i]) < 1e-10);
}

TEST_CASE("figure configs") {
  const auto f1 = figure_configs(1, ScenarioConfig{});
  CHECK(f1.size() == 6);
  for (const auto& c : f1) CHECK(c.observables == std::vector<Observable>{Observable::survival});
  const auto f3 = figure_configs(3, ScenarioConfig{});
  CHECK(f3.size() == 4);
  std::size_t series = 0;
  for (const auto& c : f3) {
    CHECK(c.state == "cat");
    series += c.observables.size();
  }
  CHECK(series == 8);
  CHECK(f3.back().m_over_p == 20);
  CHECK_THROWS_AS(figure_configs(4, ScenarioConfig{}), InputError);
  CHECK(default_figure_steps(3) == 10000);
  CHECK(default_figure_steps(1) == 2000);

  const auto f2 = figure_command(2, ScenarioConfig{});
  REQUIRE(f2.size() == 6);
  for (const auto& r : f2) {
    CHECK(r.config.observables == std::vector<Observable>{Observable::negativity});
    if (r.config.state != "werner") continue;
    for (double v : r.at("negativity").values) CHECK(v > 0);
  }
}

TEST_CASE("csv output") {
  TimeSeries s;
  s.label = "survival";
  s.times = {0, 0.5, 1};
  s.values = {1, 0.75, 0.1};
  const auto text = csv_text(s);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.rfind("pt,survival\n", 0) == 0);
  CHECK(text.find("0.10000000000000001") != std::string::npos);

  ScenarioConfig c;
  c.state = "basis(a)";
  c.m_over_p = 10;
  CHECK(state_tag(c.state) == "basis_a");
  CHECK(series_filename("fig1", c, "survival") == "fig1_basis_a_survival_m10.csv");

  const auto cfg = short_run("cat", 0, {Observable::survival, Observable::negativity}, 3);
  const auto d1 = scratch("a"), d2 = scratch("b");
  const auto files1 = emit_csv(run_scenario(cfg), d1, "run");
  const auto files2 = emit_csv(run_scenario(cfg), d2, "run");
  REQUIRE(files1.size() == 3);
  REQUIRE(files2.size() == 3);
  for (std::size_t i = 0; i < files1.size(); ++i) {
    CHECK(files1[i].filename() == files2[i].filename());
    CHECK(slurp(files1[i]) == slurp(files2[i]));
  }
  const auto survival = slurp(d1 / "run_cat_survival_m0.csv");
  CHECK(std::count(survival.begin(), survival.end(), '\n') == 4);
  const auto meta = slurp(d1 / "run_cat_m0.meta");
  CHECK(meta.find("# lambda_00") != std::string::npos);
  CHECK(meta.find("# lambda_00 = 2.2360679774997898") != std::string::npos);
  CHECK(parse_config(meta) == cfg);
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);

  // A regular file where the directory should be.
  const auto blocker = scratch("blocker");
  write_text_file(blocker, "x");
  CHECK_THROWS_AS(emit_csv(run_scenario(cfg), blocker / "sub"), IoError);
  std::filesystem::remove(blocker);
}
