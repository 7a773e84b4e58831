// trapdirac: spectra, trajectories and figure data for the trapped-ion Dirac
// simulation. Exit codes: 0 ok, 2 bad input, 3 degenerate spectrum, 4 I/O.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "trapdirac/config.hpp"
#include "trapdirac/output.hpp"
#include "trapdirac/scenario.hpp"

namespace fs = std::filesystem;
using namespace trapdirac;

namespace {

// Flag values kept as text and applied through the config parser, so flags and
// files share one validation path. Flags are applied after the file.
struct ScenarioFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
  std::string out_dir = "out";
};

const std::vector<std::pair<std::string, std::string>> kScenarioFlags{
    {"state", "cat | werner | basis(a..d) | custom"},
    {"psi", "custom amplitudes re,im for a, b, c, d"},
    {"m_over_p", "mass over momentum"},
    {"e_over_p", "field magnitude over momentum"},
    {"gamma_over_p", "noise rate over momentum"},
    {"kappa", "tensor coupling"},
    {"mu", "pseudotensor coupling"},
    {"theta", "in-plane field angle (rad)"},
    {"t_max", "end of the p*t grid"},
    {"steps", "number of grid points"},
    {"observables", "comma list of survival, negativity, discord, discord_derivative, purity, populations"},
    {"discord_side", "1 or 2"},
    {"picture_sign", "standard | paper_literal"},
    {"precision", "double | quad"},
};

std::string flag_name(const std::string& key) {
  std::string s = "--" + key;
  for (auto& c : s)
    if (c == '_') c = '-';
  return s;
}

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& flags, bool with_out_dir = true) {
  cmd->add_option("--config", flags.config_path, "key = value scenario file");
  for (const auto& [key, help] : kScenarioFlags) {
    cmd->add_option_function<std::string>(
        flag_name(key), [&flags, key = key](const std::string& v) { flags.values[key] = v; }, help);
  }
  if (with_out_dir) cmd->add_option("--out-dir", flags.out_dir, "output directory")->capture_default_str();
}

ScenarioConfig build_config(const ScenarioFlags& flags, ScenarioConfig base = {}) {
  ScenarioConfig cfg = flags.config_path.empty() ? base : load_config(flags.config_path, base);
  for (const auto& [key, value] : flags.values) apply_setting(cfg, key, value);
  return cfg;
}

std::string g17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string brief(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

void report_run(const RunResult& r, const std::vector<fs::path>& written) {
  for (const auto& p : written) std::cout << "wrote " << p.string() << "\n";
  if (r.cusps) {
    std::cout << "cusps (" << state_tag(r.config.state) << ", m/p=" << format_real(r.config.m_over_p)
              << "):";
    if (r.cusps->empty()) std::cout << " none";
    for (std::size_t i = 0; i < r.cusps->size(); ++i)
      std::cout << " pt=" << brief(r.cusps->times[i]) << " (jump " << brief(r.cusps->jump_sizes[i]) << ")";
    std::cout << "\n";
  }
  if (r.metadata.discord_side_asymmetry && *r.metadata.discord_side_asymmetry > 1e-8)
    std::cerr << "note: discord differs between sides by up to " << brief(*r.metadata.discord_side_asymmetry)
              << " (" << state_tag(r.config.state) << ", m/p=" << format_real(r.config.m_over_p) << ")\n";
  std::cout << "wall time " << brief(r.metadata.wall_seconds, 3) << " s\n";
}

int cmd_eigen(const ScenarioFlags& flags, const std::string& ion_path) {
  DiracParams d;
  if (!ion_path.empty()) {
    std::ifstream in(ion_path);
    if (!in) throw IoError("cannot read ion parameter file " + ion_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    IonParams ion;
    double p = 1.0;
    auto vec3 = [](const std::string& v, const std::string& key) {
      const auto parts = split_list(v);
      if (parts.size() != 3) throw InputError(key + " needs three comma-separated values");
      return Vec3{parse_real(parts[0], key), parse_real(parts[1], key), parse_real(parts[2], key)};
    };
    for (const auto& [key, value] : parse_key_values(ss.str())) {
      if (key == "eta") ion.eta = parse_real(value, key);
      else if (key == "omega_tilde") ion.omega_tilde = parse_real(value, key);
      else if (key == "delta") ion.delta = parse_real(value, key);
      else if (key == "Delta") ion.Delta = parse_real(value, key);
      else if (key == "omega1") ion.omega1 = vec3(value, key);
      else if (key == "omega2") ion.omega2 = vec3(value, key);
      else if (key == "p") p = parse_real(value, key);
      else throw InputError("unknown ion parameter '" + key + "'");
    }
    const auto mapping = from_ion_params(ion, p);
    d = mapping.params;
    std::cout << "c = " << g17(mapping.c) << "\n"
              << "m = " << g17(d.m) << "\np = " << g17(d.p) << "\nE = " << g17(d.E) << "\nkappa = " << g17(d.kappa)
              << "\nmu = " << g17(d.mu) << "\ntheta = " << g17(d.theta) << "\n";
  } else {
    d = build_config(flags).dirac_params();
  }
  d.validate();
  const auto inv = invariants(d);
  const auto lambdas = eigenvalues(d);
  for (int n = 0; n < 2; ++n)
    for (int s = 0; s < 2; ++s)
      std::cout << "lambda(" << n << "," << s << ") = " << g17(lambdas[spectral_index(n, s)]) << "\n";
  std::cout << "c1 = " << g17(inv.c1) << "\nc2 = " << g17(inv.c2) << "\n";
  return 0;
}

int cmd_evolve(const ScenarioFlags& flags) {
  const auto cfg = build_config(flags);
  const auto r = run_scenario(cfg);
  report_run(r, emit_csv(r, flags.out_dir));
  return 0;
}

int cmd_fig(const ScenarioFlags& flags, int fig) {
  ScenarioConfig base;
  base.steps = default_figure_steps(fig);
  const auto cfg = build_config(flags, base);
  const auto results = figure_command(fig, cfg);
  const std::string prefix = "fig" + std::to_string(fig);
  for (const auto& r : results) report_run(r, emit_csv(r, flags.out_dir, prefix));
  return 0;
}

int cmd_sweep(ScenarioFlags flags) {
  // Keys that accept comma lists; the product of all lists is run.
  const std::vector<std::string> axes{"m_over_p", "e_over_p", "gamma_over_p", "kappa", "mu", "theta"};
  std::vector<std::vector<std::string>> lists;
  for (const auto& key : axes) {
    auto it = flags.values.find(key);
    if (it == flags.values.end()) {
      lists.push_back({});
      continue;
    }
    lists.push_back(split_list(it->second));
    flags.values.erase(it);
  }
  const auto base = build_config(flags);

  std::vector<ScenarioConfig> configs{base};
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (lists[a].empty()) continue;
    std::vector<ScenarioConfig> next;
    for (const auto& c : configs)
      for (const auto& v : lists[a]) {
        ScenarioConfig copy = c;
        apply_setting(copy, axes[a], v);
        next.push_back(std::move(copy));
      }
    configs = std::move(next);
  }
  for (const auto& c : configs) c.validate();

  const auto results = run_all(configs);
  std::ostringstream index;
  index << "index,m_over_p,e_over_p,gamma_over_p,kappa,mu,theta\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& c = results[i].config;
    index << i << "," << format_real(c.m_over_p) << "," << format_real(c.e_over_p) << ","
          << format_real(c.gamma_over_p) << "," << format_real(c.kappa) << "," << format_real(c.mu) << ","
          << format_real(c.theta) << "\n";
    report_run(results[i], emit_csv(results[i], flags.out_dir, "sweep" + std::to_string(i)));
  }
  const auto index_path = fs::path(flags.out_dir) / "sweep_index.csv";
  write_text_file(index_path, index.str());
  std::cout << "wrote " << index_path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trapped-ion Dirac dynamics under collective dephasing"};
  app.require_subcommand(1);

  ScenarioFlags eigen_flags, evolve_flags, fig_flags, sweep_flags;
  std::string ion_path;
  int fig = 0;

  auto* eigen = app.add_subcommand("eigen", "print lambda_{n,s}, c1 and c2");
  add_scenario_flags(eigen, eigen_flags, false);
  eigen->add_option("--ion-params", ion_path, "key = value file of trapped-ion frequencies");

  auto* evolve = app.add_subcommand("evolve", "run one scenario and write CSV series");
  add_scenario_flags(evolve, evolve_flags);

  auto* figc = app.add_subcommand("fig", "regenerate the data behind figure 1, 2 or 3");
  figc->add_option("figure", fig, "1, 2 or 3")->required();
  add_scenario_flags(figc, fig_flags);

  auto* sweep = app.add_subcommand("sweep", "cartesian product over comma-separated parameter lists");
  add_scenario_flags(sweep, sweep_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eigen) return cmd_eigen(eigen_flags, ion_path);
    if (*evolve) return cmd_evolve(evolve_flags);
    if (*figc) return cmd_fig(fig_flags, fig);
    if (*sweep) return cmd_sweep(sweep_flags);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateSpectrum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
