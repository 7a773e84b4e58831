#pragma once

// Scenario runs: one initial state evolved under H_D and the collective
// channel, sampled on a uniform p*t grid.

#include <array>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trapdirac/channel.hpp"
#include "trapdirac/correlations.hpp"
#include "trapdirac/dirac.hpp"
#include "trapdirac/series.hpp"

namespace trapdirac {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Observable { survival, negativity, discord, discord_derivative, purity, populations };

std::string_view to_string(Observable o);
Observable parse_observable(std::string_view name);

// Arithmetic used for the whole trajectory. Quad resolves values far below
// 1e-16, e.g. late-time cat-state negativity.
enum class Precision { standard, quad };

std::string_view to_string(Precision p);
Precision parse_precision(std::string_view name);
std::string_view to_string(PictureSign s);
PictureSign parse_picture_sign(std::string_view name);

// All quantities are ratios to p (p = 1 internally); times are p*t.
struct ScenarioConfig {
  // cat | werner | basis(a) .. basis(d) | custom
  std::string state = "cat";
  // Amplitudes on |a>..|d> for state = custom; normalized on use.
  std::array<std::complex<double>, 4> psi{};
  double m_over_p = 0.0;
  double e_over_p = 1.0;
  double gamma_over_p = 0.5;
  double kappa = 1.0;
  double mu = 1.0;
  double theta = std::numbers::pi / 4;
  double t_max = 50.0;
  std::size_t steps = 2000;
  std::vector<Observable> observables{Observable::survival};
  int discord_side = 1;
  PictureSign picture_sign = PictureSign::standard;
  Precision precision = Precision::standard;

  // Throws InputError on any out-of-domain field.
  void validate() const;
  DiracParams dirac_params() const;

  bool operator==(const ScenarioConfig&) const = default;
};

// cat, werner or basis(j).
DensityMatrix preset_state(std::string_view name);

// Unnormalized amplitudes on |a>..|d>: cat -> (1,0,0,1), werner -> (0,1,1,0).
std::array<std::complex<double>, 4> preset_amplitudes(std::string_view name);
std::array<std::complex<double>, 4> initial_amplitudes(const ScenarioConfig& cfg);

// The config's initial state, including custom amplitudes.
DensityMatrix initial_state(const ScenarioConfig& cfg);

struct RunMetadata {
  std::array<double, 4> lambdas{};
  double c1 = 0.0;
  double c2 = 0.0;
  std::string version{kVersion};
  double wall_seconds = 0.0;
  // max |D_1 - D_2| along the trajectory when discord is requested.
  std::optional<double> discord_side_asymmetry;
};

struct RunResult {
  ScenarioConfig config;
  std::vector<TimeSeries> series;
  // Present when discord_derivative is requested: cusps confirmed against a
  // second pass on the grid with half the spacing.
  std::optional<CuspReport> cusps;
  RunMetadata metadata;

  // Throws InputError if no series carries `label`.
  const TimeSeries& at(std::string_view label) const;
};

// Throws DegenerateSpectrum naming the parameters when c2 vanishes.
RunResult run_scenario(const ScenarioConfig& cfg);

// Runs for figure 1, 2 or 3, derived from `base` (its couplings, rate, grid,
// sign and precision are kept; state, mass and observables are set per run).
std::vector<ScenarioConfig> figure_configs(int fig, const ScenarioConfig& base);

// Grid size used by a figure when the caller gives none: figure 3 needs a
// spacing fine enough to resolve the discord cusp.
std::size_t default_figure_steps(int fig);

// Runs every config concurrently; results keep the input order.
std::vector<RunResult> run_all(const std::vector<ScenarioConfig>& configs);

std::vector<RunResult> figure_command(int fig, const ScenarioConfig& base);

}  // namespace trapdirac
