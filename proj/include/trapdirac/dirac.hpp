#pragma once

// Dirac-like Hamiltonians on the two-qubit space and their closed-form spectra.
//
// Representation: beta = sz(x)I, alpha_k = sx(x)s_k, Sigma_k = I(x)s_k,
// gamma5 = sx(x)I. Natural units (hbar = c = 1) throughout.

#include <array>
#include <numbers>
#include <vector>

#include "trapdirac/qmat.hpp"

namespace trapdirac {

using Vec3 = std::array<double, 3>;

// Momentum p along x, field E (cos theta, sin theta, 0).
struct DiracParams {
  double m = 0.0;
  double p = 1.0;
  double E = 1.0;
  double kappa = 1.0;
  double mu = 1.0;
  double theta = std::numbers::pi / 4;
  double gamma_rate = 0.0;

  // Throws InputError unless p > 0 or E > 0, and m, E, gamma_rate >= 0.
  void validate() const;
};

struct GeneralizedParams {
  double m = 0.0;
  Vec3 P{};
  double nu = 0.0;
  double q = 0.0;
  Vec3 W{};
  double kappa_a = 0.0;
  double mu_a = 0.0;
  Vec3 B{};

  // The member of this family that reproduces build_hd(d) exactly:
  // kappa_a = mu, mu_a = -kappa, B = E (cos theta, sin theta, 0).
  static GeneralizedParams from_dirac(const DiracParams& d);
};

struct IonParams {
  double eta = 0.0;
  double omega_tilde = 0.0;
  double delta = 0.0;
  double Delta = 0.0;
  Vec3 omega1{};
  Vec3 omega2{};
};

// DiracParams recovered from ion frequencies, plus the effective light speed
// c = 2 eta Delta omega_tilde that was divided out.
struct IonMapping {
  DiracParams params;
  double c = 0.0;
};

// Mass m = 2 delta / c^2, kappa E_j = 2 omega1_j, mu E_j = 2 c omega2_j, with
// the caller's momentum p. E is the magnitude of the kappa field (or of the
// mu field when omega1 = 0); kappa and mu are the signed ratios to it, theta
// its in-plane angle. Throws InputError when c = 0, a frequency is negative,
// the two field vectors are not parallel, or either has a z component.
IonMapping from_ion_params(const IonParams& ion, double p = 1.0);

template <class Real>
struct Invariants {
  Real c1 = 0;
  Real c2 = 0;
};

// Index of (n, s) in every 4-array below: 2n + s, so (0,0) is the largest
// eigenvalue and (1,0) the most negative.
constexpr std::size_t spectral_index(int n, int s) { return static_cast<std::size_t>(2 * n + s); }

template <class Real>
struct SpectralData {
  std::array<Real, 4> lambdas{};
  std::vector<BasicDensityMatrix<Real>> projectors;
  Real c1 = 0;
  Real c2 = 0;
  BasicMatrix4<Real> hamiltonian;

  Real lambda(int n, int s) const { return lambdas[spectral_index(n, s)]; }
  const BasicDensityMatrix<Real>& projector(int n, int s) const {
    return projectors[spectral_index(n, s)];
  }
};

template <class Real = double>
BasicMatrix4<Real> build_hd(const DiracParams& params);

template <class Real = double>
BasicMatrix4<Real> build_hg(const GeneralizedParams& params);

// c1 from its closed form; c2 from the closed-form sum of squares, which is
// Tr[O^2]/4 only when nu = q = 0 and W = 0.
template <class Real = double>
Invariants<Real> invariants(const GeneralizedParams& params);

template <class Real = double>
Invariants<Real> invariants(const DiracParams& params) {
  return invariants<Real>(GeneralizedParams::from_dirac(params));
}

// O = (H^2 - c1 I) / 2.
template <class Real = double>
BasicMatrix4<Real> operator_o(const GeneralizedParams& params);

// lambda_{n,s} = (-1)^n sqrt(c1 + 2 (-1)^s sqrt(c2)). Throws DegenerateSpectrum
// when c2 < 1e-14 max(c1^2, 1) or when the inner pair collapses onto zero.
template <class Real = double>
std::array<Real, 4> eigenvalues(const GeneralizedParams& params);

template <class Real = double>
std::array<Real, 4> eigenvalues(const DiracParams& params) {
  return eigenvalues<Real>(GeneralizedParams::from_dirac(params));
}

// 1/4 (I + (-1)^s O / sqrt(c2)) (I + (-1)^n H / |lambda_{n,s}|), unchecked.
template <class Real>
BasicMatrix4<Real> ansatz_projector(const BasicMatrix4<Real>& h, const BasicMatrix4<Real>& o, Real c2,
                                    Real lambda, int n, int s);

// Builds the four ansatz projectors from given H and O and verifies them:
// [H, O] = 0 and both factor orders agree (else ConsistencyError), each
// projector has unit purity (else ConsistencyError; this is what fires when
// O^2 != c2 I) and is a valid density matrix.
template <class Real>
SpectralData<Real> spectral_from_operators(const BasicMatrix4<Real>& h, const BasicMatrix4<Real>& o,
                                           Real c1, Real c2);

template <class Real = double>
SpectralData<Real> eigenprojectors(const GeneralizedParams& params);

template <class Real = double>
SpectralData<Real> eigenprojectors(const DiracParams& params) {
  params.validate();
  return eigenprojectors<Real>(GeneralizedParams::from_dirac(params));
}

// Coefficients of rho_{n,s} = xi0 I + xi1 H + xi2 H^2 + xi3 H^3.
struct XiCoefficients {
  double xi0 = 0, xi1 = 0, xi2 = 0, xi3 = 0;
};

XiCoefficients xi_coefficients(const DiracParams& params, int n, int s);

}  // namespace trapdirac
