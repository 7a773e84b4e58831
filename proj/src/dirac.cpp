#include "trapdirac/dirac.hpp"

#include <cmath>
#include <string>

namespace trapdirac {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class Real>
Real sq(const Vec3& a) {
  return Real(a[0]) * Real(a[0]) + Real(a[1]) * Real(a[1]) + Real(a[2]) * Real(a[2]);
}

template <class Real>
Real dotr(const Vec3& a, const Vec3& b) {
  return Real(a[0]) * Real(b[0]) + Real(a[1]) * Real(b[1]) + Real(a[2]) * Real(b[2]);
}

template <class Real>
std::array<Real, 3> crossr(const Vec3& a, const Vec3& b) {
  return {Real(a[1]) * Real(b[2]) - Real(a[2]) * Real(b[1]),
          Real(a[2]) * Real(b[0]) - Real(a[0]) * Real(b[2]),
          Real(a[0]) * Real(b[1]) - Real(a[1]) * Real(b[0])};
}

template <class Real>
BasicMatrix4<Real> term(Axis first, Axis second) {
  return kron(pauli<Real>(first), pauli<Real>(second));
}

template <class Real>
BasicMatrix4<Real> left(Axis a) {
  return kron(pauli<Real>(a), BasicMatrix2<Real>::identity());
}

template <class Real>
BasicMatrix4<Real> right(Axis a) {
  return kron(BasicMatrix2<Real>::identity(), pauli<Real>(a));
}

constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

template <class Real>
Invariants<Real> checked_invariants(const GeneralizedParams& params) {
  const auto inv = invariants<Real>(params);
  const Real c1sq = inv.c1 * inv.c1;
  if (inv.c2 < Real(1e-14) * (c1sq > 1 ? c1sq : Real(1)))
    throw DegenerateSpectrum("degenerate spectrum: c2 = " + std::to_string(static_cast<double>(inv.c2)) +
                             " is negligible against c1 = " + std::to_string(static_cast<double>(inv.c1)));
  return inv;
}

}  // namespace

void DiracParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!(finite(m) && finite(p) && finite(E) && finite(kappa) && finite(mu) && finite(theta) &&
        finite(gamma_rate)))
    throw InputError("Dirac parameters must be finite");
  if (m < 0) throw InputError("mass must be >= 0");
  if (p < 0) throw InputError("momentum must be >= 0");
  if (E < 0) throw InputError("field magnitude must be >= 0");
  if (gamma_rate < 0) throw InputError("noise rate must be >= 0");
  if (!(p > 0 || E > 0)) throw InputError("at least one of p, E must be nonzero");
}

GeneralizedParams GeneralizedParams::from_dirac(const DiracParams& d) {
  GeneralizedParams g;
  g.m = d.m;
  g.P = {d.p, 0.0, 0.0};
  g.kappa_a = d.mu;
  g.mu_a = -d.kappa;
  g.B = {d.E * std::cos(d.theta), d.E * std::sin(d.theta), 0.0};
  return g;
}

IonMapping from_ion_params(const IonParams& ion, double p) {
  if (ion.omega_tilde == 0) throw InputError("omega_tilde must be nonzero");
  if (ion.Delta == 0) throw InputError("Delta must be nonzero");
  if (ion.eta == 0) throw InputError("eta must be nonzero");
  if (ion.omega_tilde < 0 || ion.Delta < 0 || ion.eta < 0)
    throw InputError("eta, omega_tilde and Delta must be positive");
  if (!(p > 0)) throw InputError("momentum must be positive");

  IonMapping out;
  out.c = 2 * ion.eta * ion.Delta * ion.omega_tilde;
  const double c = out.c;
  DiracParams& d = out.params;
  d.p = p;
  d.m = 2 * ion.delta / (c * c);
  if (d.m < 0) throw InputError("detuning must be >= 0");

  Vec3 f1, f2;
  for (int j = 0; j < 3; ++j) {
    f1[j] = 2 * ion.omega1[j];
    f2[j] = 2 * c * ion.omega2[j];
  }
  if (f1[2] != 0 || f2[2] != 0) throw InputError("carrier fields must lie in the xy-plane");
  const double n1 = std::sqrt(dot(f1, f1));
  const double n2 = std::sqrt(dot(f2, f2));
  const auto c12 = cross(f1, f2);
  if (std::sqrt(dot(c12, c12)) > 1e-12 * n1 * n2)
    throw InputError("tensor and pseudotensor carrier fields must be parallel");

  if (n1 == 0 && n2 == 0) {
    d.E = 0;
    return out;
  }
  const Vec3& ref = n1 > 0 ? f1 : f2;
  d.E = n1 > 0 ? n1 : n2;
  d.theta = std::atan2(ref[1], ref[0]);
  d.kappa = n1 / d.E;
  d.mu = (dot(f2, ref) >= 0 ? 1.0 : -1.0) * n2 / d.E;
  return out;
}

template <class Real>
BasicMatrix4<Real> build_hd(const DiracParams& params) {
  using C = Complex<Real>;
  // Same double-precision field components as GeneralizedParams::from_dirac.
  const std::array<Real, 2> field{Real(params.E * std::cos(params.theta)),
                                  Real(params.E * std::sin(params.theta))};
  BasicMatrix4<Real> h = C(params.m) * left<Real>(Axis::z) + C(params.p) * term<Real>(Axis::x, Axis::x);
  for (std::size_t k = 0; k < 2; ++k) {
    h += C(Real(params.kappa) * field[k]) * term<Real>(Axis::z, kAxes[k]);
    h -= C(Real(params.mu) * field[k]) * term<Real>(Axis::y, kAxes[k]);
  }
  return h;
}

template <class Real>
BasicMatrix4<Real> build_hg(const GeneralizedParams& g) {
  using C = Complex<Real>;
  BasicMatrix4<Real> h = C(g.m) * left<Real>(Axis::z);
  h -= C(g.nu) * left<Real>(Axis::y);
  h -= C(g.q) * left<Real>(Axis::x);
  for (std::size_t k = 0; k < 3; ++k) {
    const Axis a = kAxes[k];
    h += C(g.P[k]) * term<Real>(Axis::x, a);
    h += C(g.W[k]) * right<Real>(a);
    h -= C(Real(g.kappa_a) * Real(g.B[k])) * term<Real>(Axis::y, a);
    h -= C(Real(g.mu_a) * Real(g.B[k])) * term<Real>(Axis::z, a);
  }
  return h;
}

template <class Real>
Invariants<Real> invariants(const GeneralizedParams& g) {
  const Real m = g.m, nu = g.nu, q = g.q, ka = g.kappa_a, ma = g.mu_a;
  Invariants<Real> out;
  out.c1 = sq<Real>(g.P) + m * m + nu * nu + q * q + sq<Real>(g.W) + (ka * ka + ma * ma) * sq<Real>(g.B);

  const auto omega = crossr<Real>(g.P, g.B);
  Real t1 = 0, t2 = 0, t3 = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const Real v1 = (nu * ka - m * ma) * Real(g.B[k]) - q * Real(g.P[k]);
    const Real v2 = m * Real(g.W[k]) + ka * omega[k];
    const Real v3 = nu * Real(g.W[k]) + ma * omega[k];
    t1 += v1 * v1;
    t2 += v2 * v2;
    t3 += v3 * v3;
  }
  const Real pw = dotr<Real>(g.P, g.W);
  const Real wb = dotr<Real>(g.W, g.B);
  out.c2 = t1 + t2 + t3 + q * q * sq<Real>(g.W) + pw * pw + (ka + ma) * (ka + ma) * wb * wb;
  return out;
}

template <class Real>
BasicMatrix4<Real> operator_o(const GeneralizedParams& params) {
  const auto h = build_hg<Real>(params);
  const Real c1 = invariants<Real>(params).c1;
  BasicMatrix4<Real> o = h * h - Complex<Real>(c1) * BasicMatrix4<Real>::identity();
  o *= Complex<Real>(Real(0.5));
  return o;
}

template <class Real>
std::array<Real, 4> eigenvalues(const GeneralizedParams& params) {
  using std::sqrt;
  const auto inv = checked_invariants<Real>(params);
  const Real root = sqrt(inv.c2);
  const Real outer = inv.c1 + 2 * root;
  const Real inner = inv.c1 - 2 * root;
  const Real scale = inv.c1 > 1 ? inv.c1 : Real(1);
  if (inner < -Real(1e-10) * scale)
    throw ConsistencyError("c1 - 2 sqrt(c2) is negative; the Hamiltonian cannot be Hermitian");
  if (inner <= Real(1e-14) * scale)
    throw DegenerateSpectrum("degenerate spectrum: the inner eigenvalue pair collapses onto zero");
  std::array<Real, 4> out;
  out[spectral_index(0, 0)] = sqrt(outer);
  out[spectral_index(0, 1)] = sqrt(inner);
  out[spectral_index(1, 0)] = -sqrt(outer);
  out[spectral_index(1, 1)] = -sqrt(inner);
  return out;
}

template <class Real>
BasicMatrix4<Real> ansatz_projector(const BasicMatrix4<Real>& h, const BasicMatrix4<Real>& o, Real c2,
                                    Real lambda, int n, int s) {
  using std::abs;
  using std::sqrt;
  using C = Complex<Real>;
  const auto id = BasicMatrix4<Real>::identity();
  const Real so = (s % 2 == 0 ? Real(1) : Real(-1)) / sqrt(c2);
  const Real sh = (n % 2 == 0 ? Real(1) : Real(-1)) / abs(lambda);
  BasicMatrix4<Real> out = (id + C(so) * o) * (id + C(sh) * h);
  out *= C(Real(0.25));
  return out;
}

template <class Real>
SpectralData<Real> spectral_from_operators(const BasicMatrix4<Real>& h, const BasicMatrix4<Real>& o,
                                           Real c1, Real c2) {
  using std::abs;
  using std::sqrt;
  using C = Complex<Real>;
  const Real scale = max_abs_entry(h) > 1 ? max_abs_entry(h) : Real(1);
  if (max_abs_entry(commutator(h, o)) > Real(1e-10) * scale * scale * scale)
    throw ConsistencyError("[H, O] != 0: the ansatz factors do not commute");

  const Real root = sqrt(c2);
  const std::array<Real, 4> lambdas{sqrt(c1 + 2 * root), sqrt(c1 - 2 * root), -sqrt(c1 + 2 * root),
                                    -sqrt(c1 - 2 * root)};
  SpectralData<Real> out;
  out.lambdas = lambdas;
  out.c1 = c1;
  out.c2 = c2;
  out.hamiltonian = h;
  out.projectors.reserve(4);
  const auto id = BasicMatrix4<Real>::identity();
  for (int n = 0; n < 2; ++n)
    for (int s = 0; s < 2; ++s) {
      const Real lambda = lambdas[spectral_index(n, s)];
      const auto rho = ansatz_projector(h, o, c2, lambda, n, s);
      // The other factor order.
      const Real so = (s == 0 ? Real(1) : Real(-1)) / root;
      const Real sh = (n == 0 ? Real(1) : Real(-1)) / abs(lambda);
      BasicMatrix4<Real> swapped = (id + C(sh) * h) * (id + C(so) * o);
      swapped *= C(Real(0.25));
      if (max_abs_diff(rho, swapped) > Real(1e-10))
        throw ConsistencyError("ansatz factor orders disagree");
      const Real purity = (rho * rho).trace().real();
      if (abs(purity - 1) > Real(1e-10))
        throw ConsistencyError("ansatz projector (" + std::to_string(n) + "," + std::to_string(s) +
                               ") is not pure: Tr[rho^2] = " + std::to_string(static_cast<double>(purity)) +
                               " (O^2 != c2 I for these parameters)");
      out.projectors.emplace_back(rho);
    }
  return out;
}

template <class Real>
SpectralData<Real> eigenprojectors(const GeneralizedParams& params) {
  const auto inv = checked_invariants<Real>(params);
  eigenvalues<Real>(params);
  const auto h = build_hg<Real>(params);
  BasicMatrix4<Real> o = h * h - Complex<Real>(inv.c1) * BasicMatrix4<Real>::identity();
  o *= Complex<Real>(Real(0.5));
  return spectral_from_operators(h, o, inv.c1, inv.c2);
}

XiCoefficients xi_coefficients(const DiracParams& params, int n, int s) {
  if ((n != 0 && n != 1) || (s != 0 && s != 1)) throw InputError("n and s must be 0 or 1");
  const auto g = GeneralizedParams::from_dirac(params);
  const auto inv = checked_invariants<double>(g);
  const double lam = std::abs(eigenvalues<double>(g)[spectral_index(n, s)]);
  const double root = std::sqrt(inv.c2);
  const double sgn_s = s == 0 ? 1.0 : -1.0;
  const double sgn_n = n == 0 ? 1.0 : -1.0;
  XiCoefficients xi;
  xi.xi0 = 0.25 * (1 - sgn_s * inv.c1 / (2 * root));
  xi.xi1 = 0.25 * (sgn_n / lam - inv.c1 * sgn_s * sgn_n / (2 * root * lam));
  xi.xi2 = sgn_s / (8 * root);
  xi.xi3 = sgn_s * sgn_n / (8 * root * lam);
  return xi;
}

#define TRAPDIRAC_INSTANTIATE(Real)                                                                       \
  template BasicMatrix4<Real> build_hd<Real>(const DiracParams&);                                         \
  template BasicMatrix4<Real> build_hg<Real>(const GeneralizedParams&);                                   \
  template Invariants<Real> invariants<Real>(const GeneralizedParams&);                                   \
  template BasicMatrix4<Real> operator_o<Real>(const GeneralizedParams&);                                 \
  template std::array<Real, 4> eigenvalues<Real>(const GeneralizedParams&);                               \
  template BasicMatrix4<Real> ansatz_projector<Real>(const BasicMatrix4<Real>&, const BasicMatrix4<Real>&, \
                                                     Real, Real, int, int);                               \
  template SpectralData<Real> spectral_from_operators<Real>(const BasicMatrix4<Real>&,                    \
                                                            const BasicMatrix4<Real>&, Real, Real);       \
  template SpectralData<Real> eigenprojectors<Real>(const GeneralizedParams&);

TRAPDIRAC_INSTANTIATE(double)
TRAPDIRAC_INSTANTIATE(Quad)

}  // namespace trapdirac
