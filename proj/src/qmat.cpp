#include "trapdirac/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

namespace trapdirac {

Axis parse_axis(std::string_view name) {
  if (name == "x") return Axis::x;
  if (name == "y") return Axis::y;
  if (name == "z") return Axis::z;
  throw InputError("invalid Pauli axis '" + std::string(name) + "' (expected x, y or z)");
}

Qubit qubit_from_index(int index) {
  if (index == 1) return Qubit::first;
  if (index == 2) return Qubit::second;
  throw InputError("subsystem must be 1 or 2, got " + std::to_string(index));
}

namespace {

template <class Real>
Real off_diagonal_norm(const BasicMatrix4<Real>& a) {
  using std::sqrt;
  Real s = 0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c) s += std::norm(a(r, c));
  return sqrt(s);
}

// A <- J^dagger A J and V <- V J for the plane rotation that zeroes A(p, q).
template <class Real>
void jacobi_rotate(BasicMatrix4<Real>& a, BasicMatrix4<Real>& v, std::size_t p, std::size_t q) {
  using std::abs;
  using std::sqrt;
  using C = Complex<Real>;
  const C apq = a(p, q);
  const Real r = abs(apq);
  if (r == 0) return;
  const C u = apq / r;
  const Real theta = (a(q, q).real() - a(p, p).real()) / (2 * r);
  const Real t = (theta >= 0 ? Real(1) : Real(-1)) / (abs(theta) + sqrt(theta * theta + 1));
  const Real c = 1 / sqrt(t * t + 1);
  const Real s = t * c;
  // J = identity except J(p,p)=c, J(p,q)=s u, J(q,p)=-s conj(u), J(q,q)=c.
  const C jpq = s * u;
  const C jqp = -s * std::conj(u);
  for (std::size_t k = 0; k < 4; ++k) {
    const C akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * jpq + akq * c;
    const C vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const C apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  a(p, q) = 0;
  a(q, p) = 0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

template <class Real>
EigenSystem<Real> hermitian_eigen(const BasicMatrix4<Real>& m) {
  if (!is_hermitian(m)) throw ContractViolation("hermitian_eigen: input is not Hermitian");
  BasicMatrix4<Real> a = m;
  // Symmetrize so the rotations act on an exactly Hermitian matrix.
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = r; c < 4; ++c) {
      const auto mean = (a(r, c) + std::conj(a(c, r))) / Real(2);
      a(r, c) = mean;
      a(c, r) = std::conj(mean);
    }
  BasicMatrix4<Real> v = BasicMatrix4<Real>::identity();
  const Real scale = frobenius_norm(a);
  const Real threshold = Real(JacobiTraits<Real>::off_threshold) * scale;

  constexpr int max_sweeps = 100;
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > max_sweeps) throw ConsistencyError("hermitian_eigen: Jacobi sweeps did not converge");
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) jacobi_rotate(a, v, p, q);
  }

  std::array<std::size_t, 4> order;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenSystem<Real> out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < 4; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

template <class Real>
bool is_psd(const BasicMatrix4<Real>& m, double min_eigenvalue) {
  if (!is_hermitian(m)) return false;
  return hermitian_eigen(m).values[0] >= Real(min_eigenvalue);
}

template <class Real>
BasicMatrix4<Real> partial_transpose(const BasicMatrix4<Real>& m, Qubit qubit) {
  BasicMatrix4<Real> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          const auto& src = m(2 * i + k, 2 * j + l);
          if (qubit == Qubit::first)
            out(2 * j + k, 2 * i + l) = src;
          else
            out(2 * i + l, 2 * j + k) = src;
        }
  return out;
}

template <class Real>
Real trace_norm(const BasicMatrix4<Real>& m) {
  using std::abs;
  const auto values = hermitian_eigen(m).values;
  Real s = 0;
  for (const auto& v : values) s += abs(v);
  return s;
}

template <class Real>
BasicDensityMatrix<Real>::BasicDensityMatrix(const matrix_type& m) : mat_(m) {
  if (!is_hermitian(m)) throw ContractViolation("density matrix is not Hermitian");
  if (!is_unit_trace(m)) throw ContractViolation("density matrix trace is not 1");
  const auto es = hermitian_eigen(m);
  if (es.values[0] < Real(tol::psd))
    throw ContractViolation("density matrix has a negative eigenvalue");
  if (es.values[0] >= 0) return;
  std::array<Complex<Real>, 4> d;
  Real total = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const Real clamped = es.values[k] < 0 ? Real(0) : es.values[k];
    d[k] = clamped;
    total += clamped;
  }
  for (auto& x : d) x /= total;
  mat_ = es.vectors * matrix_type::diagonal(d) * es.vectors.adjoint();
}

template <class Real>
BasicDensityMatrix<Real> BasicDensityMatrix<Real>::pure(const std::array<Complex<Real>, 4>& psi) {
  Real norm2 = 0;
  for (const auto& x : psi) norm2 += std::norm(x);
  if (norm2 == 0) throw InputError("state vector is zero");
  matrix_type m = matrix_type::outer(psi, psi);
  m *= Complex<Real>(1 / norm2);
  return BasicDensityMatrix(m);
}

template <class Real>
BasicDensityMatrix<Real> BasicDensityMatrix<Real>::maximally_mixed() {
  const Complex<Real> q(Real(0.25));
  return BasicDensityMatrix(matrix_type::diagonal({q, q, q, q}));
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  for (std::size_t r = 0; r < 4; ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < 4; ++c)
      os << (c ? ", " : "[") << m(r, c).real() << (m(r, c).imag() < 0 ? "-" : "+")
         << std::abs(m(r, c).imag()) << "i";
    os << (r == 3 ? "]]" : "]\n");
  }
  return os;
}

#define TRAPDIRAC_INSTANTIATE(Real)                                                       \
  template EigenSystem<Real> hermitian_eigen<Real>(const BasicMatrix4<Real>&);            \
  template bool is_psd<Real>(const BasicMatrix4<Real>&, double);                          \
  template BasicMatrix4<Real> partial_transpose<Real>(const BasicMatrix4<Real>&, Qubit); \
  template Real trace_norm<Real>(const BasicMatrix4<Real>&);                              \
  template class BasicDensityMatrix<Real>;

TRAPDIRAC_INSTANTIATE(double)
TRAPDIRAC_INSTANTIATE(Quad)

}  // namespace trapdirac
