#include "trapdirac/channel.hpp"

#include <cmath>
#include <string>

namespace trapdirac {

template <class Real>
KrausSet<Real> kraus_set(double gamma_rate, double t) {
  using std::exp;
  using std::sqrt;
  if (!(gamma_rate >= 0)) throw InputError("noise rate must be >= 0");
  if (!(t >= 0)) throw InputError("time must be >= 0");
  const Real x = exp(-Real(gamma_rate) * Real(t));
  const Real g = exp(-Real(gamma_rate) * Real(t) / 2);
  const Real w1 = sqrt(1 - x);
  const Real w2 = -w1 * x;
  const Real w3 = w1 * w1 * sqrt(1 + x);
  using M = BasicMatrix4<Real>;
  using C = Complex<Real>;
  const C zero(0), one(1);
  KrausSet<Real> ks;
  ks.d1 = M::diagonal({C(g), one, one, C(g)});
  ks.d2 = M::diagonal({C(w1), zero, zero, C(w2)});
  ks.d3 = M::diagonal({zero, zero, zero, C(w3)});
  ks.t = t;
  ks.gamma_rate = gamma_rate;
  return ks;
}

template <class Real>
BasicDensityMatrix<Real> apply_channel(const BasicDensityMatrix<Real>& rho0, const KrausSet<Real>& ks) {
  const auto& r = rho0.matrix();
  BasicMatrix4<Real> out = ks.d1.adjoint() * r * ks.d1;
  out += ks.d2.adjoint() * r * ks.d2;
  out += ks.d3.adjoint() * r * ks.d3;
  return BasicDensityMatrix<Real>(out);
}

template <class Real>
BasicMatrix4<Real> evolution_operator(const SpectralData<Real>& spec, double t, PictureSign sign) {
  const Real direction = sign == PictureSign::standard ? Real(-1) : Real(1);
  BasicMatrix4<Real> u;
  for (std::size_t k = 0; k < 4; ++k)
    u += std::polar(Real(1), direction * spec.lambdas[k] * Real(t)) * spec.projectors[k].matrix();
  return u;
}

namespace {

template <class Real>
BasicDensityMatrix<Real> conjugate(const BasicMatrix4<Real>& rho, const SpectralData<Real>& spec, double t,
                                   const EvolutionOptions& opts) {
  if (opts.freeze_phases) return BasicDensityMatrix<Real>(rho);
  const auto u = evolution_operator(spec, t, opts.sign);
  return BasicDensityMatrix<Real>(u * rho * u.adjoint());
}

}  // namespace

template <class Real>
BasicDensityMatrix<Real> evolve_noiseless(const BasicDensityMatrix<Real>& rho0, const SpectralData<Real>& spec,
                                          double t, const EvolutionOptions& opts) {
  return conjugate(rho0.matrix(), spec, t, opts);
}

template <class Real>
BasicDensityMatrix<Real> evolve_noisy(const BasicDensityMatrix<Real>& rho0, const SpectralData<Real>& spec,
                                      double gamma_rate, double t, const EvolutionOptions& opts) {
  const auto damped = apply_channel(rho0, kraus_set<Real>(gamma_rate, t));
  return conjugate(damped.matrix(), spec, t, opts);
}

template <class Real>
Real survival_probability(const BasicDensityMatrix<Real>& rho0, const BasicDensityMatrix<Real>& rho_t) {
  return (rho0.matrix() * rho_t.matrix()).trace().real();
}

BasisState parse_basis_state(std::string_view name) {
  if (name == "a") return BasisState::a;
  if (name == "b") return BasisState::b;
  if (name == "c") return BasisState::c;
  if (name == "d") return BasisState::d;
  throw InputError("unknown basis state '" + std::string(name) + "' (expected a, b, c or d)");
}

double transition_probability(BasisState j, BasisState k, const SpectralData<double>& spec, double t) {
  std::array<Complex<double>, 4> psi{};
  psi[static_cast<std::size_t>(j)] = 1;
  const auto rho_t = evolve_noiseless(DensityMatrix::pure(psi), spec, t);
  const auto idx = static_cast<std::size_t>(k);
  return rho_t(idx, idx).real();
}

#define TRAPDIRAC_INSTANTIATE(Real)                                                                              \
  template KrausSet<Real> kraus_set<Real>(double, double);                                                       \
  template BasicDensityMatrix<Real> apply_channel<Real>(const BasicDensityMatrix<Real>&, const KrausSet<Real>&); \
  template BasicMatrix4<Real> evolution_operator<Real>(const SpectralData<Real>&, double, PictureSign);           \
  template BasicDensityMatrix<Real> evolve_noiseless<Real>(const BasicDensityMatrix<Real>&,                      \
                                                           const SpectralData<Real>&, double,                    \
                                                           const EvolutionOptions&);                             \
  template BasicDensityMatrix<Real> evolve_noisy<Real>(const BasicDensityMatrix<Real>&, const SpectralData<Real>&, \
                                                       double, double, const EvolutionOptions&);                 \
  template Real survival_probability<Real>(const BasicDensityMatrix<Real>&, const BasicDensityMatrix<Real>&);

TRAPDIRAC_INSTANTIATE(double)
TRAPDIRAC_INSTANTIATE(Quad)

}  // namespace trapdirac
