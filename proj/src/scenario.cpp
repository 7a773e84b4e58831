#include "trapdirac/scenario.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <sstream>

namespace trapdirac {

namespace {

constexpr std::array<std::string_view, 6> kObservableNames{"survival", "negativity",         "discord",
                                                           "discord_derivative", "purity", "populations"};

bool wants(const ScenarioConfig& cfg, Observable o) {
  for (auto x : cfg.observables)
    if (x == o) return true;
  return false;
}

std::string describe(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "m/p=" << cfg.m_over_p << ", E/p=" << cfg.e_over_p << ", kappa=" << cfg.kappa << ", mu=" << cfg.mu
     << ", theta=" << cfg.theta;
  return os.str();
}

struct Samples {
  std::vector<double> survival, negativity, discord, purity;
  std::array<std::vector<double>, 4> populations;
  double asymmetry = 0.0;
};

template <class Real>
SpectralData<Real> spectrum_for(const ScenarioConfig& cfg) {
  try {
    return eigenprojectors<Real>(cfg.dirac_params());
  } catch (const DegenerateSpectrum& e) {
    throw DegenerateSpectrum(std::string(e.what()) + " [" + describe(cfg) + "]");
  }
}

template <class Real>
Samples sample(const ScenarioConfig& cfg, const SpectralData<Real>& spec, const std::vector<double>& grid,
               bool survival, bool neg, bool disc, bool pur, bool pops) {
  std::array<Complex<Real>, 4> psi;
  const auto amps = initial_amplitudes(cfg);
  for (std::size_t k = 0; k < 4; ++k) psi[k] = Complex<Real>(amps[k].real(), amps[k].imag());
  const auto rho0 = BasicDensityMatrix<Real>::pure(psi);
  const EvolutionOptions opts{cfg.picture_sign, false};
  const Qubit side = qubit_from_index(cfg.discord_side);
  const Qubit other = side == Qubit::first ? Qubit::second : Qubit::first;
  const bool symmetric_preset = cfg.state == "cat" || cfg.state == "werner";

  Samples s;
  for (double t : grid) {
    const auto rho = evolve_noisy(rho0, spec, cfg.gamma_over_p, t, opts);
    if (survival) s.survival.push_back(static_cast<double>(survival_probability(rho0, rho)));
    if (neg) s.negativity.push_back(static_cast<double>(negativity(rho)));
    if (disc) {
      const Real d = geometric_discord(rho, side);
      s.discord.push_back(static_cast<double>(d));
      if (symmetric_preset) {
        using std::abs;
        s.asymmetry = std::max(s.asymmetry, static_cast<double>(abs(d - geometric_discord(rho, other))));
      }
    }
    if (pur) s.purity.push_back(static_cast<double>(purity(rho)));
    if (pops)
      for (std::size_t k = 0; k < 4; ++k) s.populations[k].push_back(static_cast<double>(rho(k, k).real()));
  }
  return s;
}

TimeSeries make_series(std::string label, const std::vector<double>& grid, std::vector<double> values) {
  TimeSeries ts;
  ts.label = std::move(label);
  ts.times = grid;
  ts.values = std::move(values);
  return ts;
}

template <class Real>
RunResult run_with(const ScenarioConfig& cfg) {
  const auto spec = spectrum_for<Real>(cfg);
  const auto grid = uniform_grid(cfg.t_max, cfg.steps);
  const bool deriv = wants(cfg, Observable::discord_derivative);
  const bool disc = wants(cfg, Observable::discord) || deriv;
  auto s = sample<Real>(cfg, spec, grid, wants(cfg, Observable::survival), wants(cfg, Observable::negativity),
                        disc, wants(cfg, Observable::purity), wants(cfg, Observable::populations));

  RunResult r;
  r.config = cfg;
  for (std::size_t k = 0; k < 4; ++k) r.metadata.lambdas[k] = static_cast<double>(spec.lambdas[k]);
  r.metadata.c1 = static_cast<double>(spec.c1);
  r.metadata.c2 = static_cast<double>(spec.c2);

  // Series follow the order in which observables were requested.
  for (auto o : cfg.observables) {
    switch (o) {
      case Observable::survival:
        r.series.push_back(make_series("survival", grid, s.survival));
        break;
      case Observable::negativity:
        r.series.push_back(make_series("negativity", grid, s.negativity));
        break;
      case Observable::discord:
        r.series.push_back(make_series("discord", grid, s.discord));
        break;
      case Observable::discord_derivative: {
        auto d = discord_derivative(make_series("discord", grid, s.discord));
        r.cusps = CuspReport{};
        if (cfg.steps >= 16) {
          const auto fine_grid = uniform_grid(cfg.t_max, 2 * cfg.steps - 1);
          const auto fine = sample<Real>(cfg, spec, fine_grid, false, false, true, false, false);
          r.cusps = detect_stable_cusps(d, discord_derivative(make_series("discord", fine_grid, fine.discord)));
        }
        r.series.push_back(std::move(d));
        break;
      }
      case Observable::purity:
        r.series.push_back(make_series("purity", grid, s.purity));
        break;
      case Observable::populations:
        for (std::size_t k = 0; k < 4; ++k)
          r.series.push_back(make_series(std::string("population_") + char('a' + k), grid, s.populations[k]));
        break;
    }
  }
  if (disc && (cfg.state == "cat" || cfg.state == "werner")) r.metadata.discord_side_asymmetry = s.asymmetry;
  return r;
}

}  // namespace

std::string_view to_string(Observable o) { return kObservableNames[static_cast<std::size_t>(o)]; }

Observable parse_observable(std::string_view name) {
  for (std::size_t i = 0; i < kObservableNames.size(); ++i)
    if (kObservableNames[i] == name) return static_cast<Observable>(i);
  throw InputError("unknown observable '" + std::string(name) + "'");
}

std::string_view to_string(Precision p) { return p == Precision::standard ? "double" : "quad"; }

Precision parse_precision(std::string_view name) {
  if (name == "double") return Precision::standard;
  if (name == "quad") return Precision::quad;
  throw InputError("unknown precision '" + std::string(name) + "' (expected double or quad)");
}

std::string_view to_string(PictureSign s) { return s == PictureSign::standard ? "standard" : "paper_literal"; }

PictureSign parse_picture_sign(std::string_view name) {
  if (name == "standard") return PictureSign::standard;
  if (name == "paper_literal") return PictureSign::paper_literal;
  throw InputError("unknown picture sign '" + std::string(name) + "' (expected standard or paper_literal)");
}

void ScenarioConfig::validate() const {
  if (steps < 2) throw InputError("steps must be >= 2");
  if (!(t_max > 0) || !std::isfinite(t_max)) throw InputError("t_max must be > 0");
  if (discord_side != 1 && discord_side != 2) throw InputError("discord side must be 1 or 2");
  if (observables.empty()) throw InputError("no observables requested");
  initial_state(*this);
  dirac_params().validate();
}

DiracParams ScenarioConfig::dirac_params() const {
  DiracParams d;
  d.m = m_over_p;
  d.p = 1.0;
  d.E = e_over_p;
  d.kappa = kappa;
  d.mu = mu;
  d.theta = theta;
  d.gamma_rate = gamma_over_p;
  return d;
}

std::array<std::complex<double>, 4> preset_amplitudes(std::string_view name) {
  using C = std::complex<double>;
  if (name == "cat") return {C(1), C(0), C(0), C(1)};
  if (name == "werner") return {C(0), C(1), C(1), C(0)};
  if (name.size() == 8 && name.substr(0, 6) == "basis(" && name.back() == ')') {
    std::array<C, 4> psi{};
    psi[static_cast<std::size_t>(parse_basis_state(name.substr(6, 1)))] = 1;
    return psi;
  }
  throw InputError("unknown state '" + std::string(name) + "' (expected cat, werner, basis(a..d) or custom)");
}

std::array<std::complex<double>, 4> initial_amplitudes(const ScenarioConfig& cfg) {
  return cfg.state == "custom" ? cfg.psi : preset_amplitudes(cfg.state);
}

DensityMatrix preset_state(std::string_view name) { return DensityMatrix::pure(preset_amplitudes(name)); }

DensityMatrix initial_state(const ScenarioConfig& cfg) { return DensityMatrix::pure(initial_amplitudes(cfg)); }

const TimeSeries& RunResult::at(std::string_view label) const {
  for (const auto& s : series)
    if (s.label == label) return s;
  throw InputError("run has no series '" + std::string(label) + "'");
}

RunResult run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  RunResult r = cfg.precision == Precision::quad ? run_with<Quad>(cfg) : run_with<double>(cfg);
  r.metadata.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::size_t default_figure_steps(int fig) { return fig == 3 ? 10000 : 2000; }

std::vector<ScenarioConfig> figure_configs(int fig, const ScenarioConfig& base) {
  std::vector<ScenarioConfig> out;
  auto add = [&](const char* state, double m, std::vector<Observable> obs) {
    ScenarioConfig c = base;
    c.state = state;
    c.m_over_p = m;
    c.observables = std::move(obs);
    out.push_back(std::move(c));
  };
  switch (fig) {
    case 1:
    case 2: {
      const Observable o = fig == 1 ? Observable::survival : Observable::negativity;
      for (const char* state : {"cat", "werner"})
        for (double m : {0.0, 1.0, 10.0}) add(state, m, {o});
      break;
    }
    case 3:
      for (double m : {0.0, 1.0, 10.0, 20.0}) add("cat", m, {Observable::discord, Observable::discord_derivative});
      break;
    default:
      throw InputError("figure must be 1, 2 or 3, got " + std::to_string(fig));
  }
  return out;
}

std::vector<RunResult> run_all(const std::vector<ScenarioConfig>& configs) {
  std::vector<std::future<RunResult>> jobs;
  jobs.reserve(configs.size());
  for (const auto& c : configs) jobs.push_back(std::async(std::launch::async, [c] { return run_scenario(c); }));
  std::vector<RunResult> out;
  out.reserve(configs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::vector<RunResult> figure_command(int fig, const ScenarioConfig& base) {
  return run_all(figure_configs(fig, base));
}

}  // namespace trapdirac
