#include "trapdirac/correlations.hpp"

#include <cmath>

namespace trapdirac {

namespace {

constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

template <class Real>
Real expectation(const BasicMatrix4<Real>& rho, const BasicMatrix4<Real>& op) {
  return (rho * op).trace().real();
}

}  // namespace

template <class Real>
BasicFano<Real> fano(const BasicDensityMatrix<Real>& rho) {
  const auto id = BasicMatrix2<Real>::identity();
  const auto& r = rho.matrix();
  BasicFano<Real> f;
  for (std::size_t i = 0; i < 3; ++i) {
    f.a1[i] = expectation(r, kron(pauli<Real>(kAxes[i]), id));
    f.a2[i] = expectation(r, kron(id, pauli<Real>(kAxes[i])));
    for (std::size_t j = 0; j < 3; ++j)
      f.T[i][j] = expectation(r, kron(pauli<Real>(kAxes[i]), pauli<Real>(kAxes[j])));
  }
  return f;
}

template <class Real>
BasicMatrix4<Real> reconstruct(const BasicFano<Real>& f) {
  using C = Complex<Real>;
  const auto id = BasicMatrix2<Real>::identity();
  BasicMatrix4<Real> m = BasicMatrix4<Real>::identity();
  for (std::size_t i = 0; i < 3; ++i) {
    m += C(f.a1[i]) * kron(pauli<Real>(kAxes[i]), id);
    m += C(f.a2[i]) * kron(id, pauli<Real>(kAxes[i]));
    for (std::size_t j = 0; j < 3; ++j) m += C(f.T[i][j]) * kron(pauli<Real>(kAxes[i]), pauli<Real>(kAxes[j]));
  }
  m *= C(Real(0.25));
  return m;
}

template <class Real>
Real negativity(const BasicDensityMatrix<Real>& rho, Qubit subsystem) {
  const Real n = trace_norm(partial_transpose(rho, subsystem)) - 1;
  return n > 0 ? n : Real(0);
}

template <class Real>
Real geometric_discord(const BasicDensityMatrix<Real>& rho, Qubit side) {
  const auto f = fano(rho);
  const auto& a = side == Qubit::first ? f.a1 : f.a2;
  // K = a a^T + T T^T (side 1) or a a^T + T^T T (side 2), embedded in 4x4.
  BasicMatrix4<Real> k;
  Real norm_a = 0, norm_t = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    norm_a += a[i] * a[i];
    for (std::size_t j = 0; j < 3; ++j) {
      norm_t += f.T[i][j] * f.T[i][j];
      Real kij = a[i] * a[j];
      for (std::size_t l = 0; l < 3; ++l)
        kij += side == Qubit::first ? f.T[i][l] * f.T[j][l] : f.T[l][i] * f.T[l][j];
      k(i, j) = kij;
    }
  }
  const Real k_max = hermitian_eigen(k).values[3];
  const Real d = (norm_a + norm_t - k_max) / 4;
  return d > 0 ? d : Real(0);
}

template <class Real>
Real purity(const BasicDensityMatrix<Real>& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

TimeSeries discord_derivative(const TimeSeries& series) {
  series.validate();
  const std::size_t n = series.size();
  if (n < 3) throw InputError("derivative needs at least 3 points");
  const auto& t = series.times;
  const auto& y = series.values;
  const double h = (t.back() - t.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs((t[i] - t[i - 1]) - h) > 1e-6 * h) throw InputError("derivative needs a uniform time grid");

  TimeSeries out;
  out.label = series.label + "_derivative";
  out.times = t;
  out.values.resize(n);
  out.values[0] = (-3 * y[0] + 4 * y[1] - y[2]) / (2 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) out.values[i] = (y[i + 1] - y[i - 1]) / (2 * h);
  out.values[n - 1] = (3 * y[n - 1] - 4 * y[n - 2] + y[n - 3]) / (2 * h);
  return out;
}

#define TRAPDIRAC_INSTANTIATE(Real)                                                 \
  template BasicFano<Real> fano<Real>(const BasicDensityMatrix<Real>&);             \
  template BasicMatrix4<Real> reconstruct<Real>(const BasicFano<Real>&);            \
  template Real negativity<Real>(const BasicDensityMatrix<Real>&, Qubit);           \
  template Real geometric_discord<Real>(const BasicDensityMatrix<Real>&, Qubit);    \
  template Real purity<Real>(const BasicDensityMatrix<Real>&);

TRAPDIRAC_INSTANTIATE(double)
TRAPDIRAC_INSTANTIATE(Quad)

}  // namespace trapdirac
