#pragma once

// Collective-dephasing channel and the closed-form time evolution built on the
// spectral decomposition of H_D.

#include "trapdirac/dirac.hpp"
#include "trapdirac/qmat.hpp"

namespace trapdirac {

// D1 = diag(g, 1, 1, g), D2 = diag(w1, 0, 0, w2), D3 = diag(0, 0, 0, w3) with
// x = exp(-G t), g = sqrt(x), w1 = sqrt(1 - x), w2 = -w1 x, w3 = w1^2 sqrt(1 + x).
template <class Real>
struct KrausSet {
  BasicMatrix4<Real> d1, d2, d3;
  double t = 0.0;
  double gamma_rate = 0.0;
};

// Throws InputError for negative rate or time.
template <class Real = double>
KrausSet<Real> kraus_set(double gamma_rate, double t);

// sum_mu D_mu^dagger rho D_mu.
template <class Real>
BasicDensityMatrix<Real> apply_channel(const BasicDensityMatrix<Real>& rho0, const KrausSet<Real>& ks);

// Sign of the phase in exp(-+ i lambda t). `standard` uses exp(-i lambda t),
// the convention of the spectral expansion; `paper_literal` follows the
// operator form exp(+i H t) rho exp(-i H t) as printed.
enum class PictureSign { standard, paper_literal };

struct EvolutionOptions {
  PictureSign sign = PictureSign::standard;
  // Drop the unitary part entirely; only the channel acts.
  bool freeze_phases = false;
};

// U(t) = sum_{n,s} exp(-+ i lambda_{n,s} t) rho_{n,s}.
template <class Real>
BasicMatrix4<Real> evolution_operator(const SpectralData<Real>& spec, double t, PictureSign sign);

// sum exp(-i (l_ns - l_ml) t) rho_ns rho0 rho_ml, evaluated as U rho0 U^dagger.
template <class Real>
BasicDensityMatrix<Real> evolve_noiseless(const BasicDensityMatrix<Real>& rho0, const SpectralData<Real>& spec,
                                          double t, const EvolutionOptions& opts = {});

// The same conjugation applied to the channel output at time t.
template <class Real>
BasicDensityMatrix<Real> evolve_noisy(const BasicDensityMatrix<Real>& rho0, const SpectralData<Real>& spec,
                                      double gamma_rate, double t, const EvolutionOptions& opts = {});

// Tr[rho0 rho_t].
template <class Real>
Real survival_probability(const BasicDensityMatrix<Real>& rho0, const BasicDensityMatrix<Real>& rho_t);

enum class BasisState { a = 0, b = 1, c = 2, d = 3 };

// "a".."d"; anything else is an InputError.
BasisState parse_basis_state(std::string_view name);

// Probability of finding |k> at time t after starting in |j>, noiseless.
double transition_probability(BasisState j, BasisState k, const SpectralData<double>& spec, double t);

}  // namespace trapdirac
