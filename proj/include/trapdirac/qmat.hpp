#pragma once

// Fixed-size complex matrices for one four-level ion read as two qubits.
//
// Basis order is |a>=|00>, |b>=|01>, |c>=|10>, |d>=|11> (indices 0..3); qubit 1
// (total angular momentum F) is the left Kronecker factor, qubit 2 (its
// projection M) the right one. Nothing in the library ever reorders this.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string_view>

#include "trapdirac/error.hpp"
#include "trapdirac/precision.hpp"

namespace trapdirac {

template <class Real>
using Complex = std::complex<Real>;

template <class Real>
class BasicMatrix2 {
 public:
  using value_type = Complex<Real>;

  BasicMatrix2() = default;
  // Row-major entries.
  BasicMatrix2(std::initializer_list<value_type> entries) {
    if (entries.size() != 4) throw InputError("BasicMatrix2 needs 4 entries");
    std::size_t i = 0;
    for (const auto& v : entries) e_[i++] = v;
  }

  static BasicMatrix2 identity() { return {value_type(1), value_type(0), value_type(0), value_type(1)}; }

  value_type& operator()(std::size_t r, std::size_t c) { return e_[2 * r + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return e_[2 * r + c]; }

  friend BasicMatrix2 operator+(BasicMatrix2 a, const BasicMatrix2& b) {
    for (std::size_t i = 0; i < 4; ++i) a.e_[i] += b.e_[i];
    return a;
  }
  friend BasicMatrix2 operator-(BasicMatrix2 a, const BasicMatrix2& b) {
    for (std::size_t i = 0; i < 4; ++i) a.e_[i] -= b.e_[i];
    return a;
  }
  friend BasicMatrix2 operator*(const value_type& s, BasicMatrix2 a) {
    for (auto& v : a.e_) v *= s;
    return a;
  }
  friend BasicMatrix2 operator*(const BasicMatrix2& a, const BasicMatrix2& b) {
    BasicMatrix2 out;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    return out;
  }
  friend bool operator==(const BasicMatrix2&, const BasicMatrix2&) = default;

 private:
  std::array<value_type, 4> e_{};
};

template <class Real>
class BasicMatrix4 {
 public:
  using value_type = Complex<Real>;
  using real_type = Real;
  static constexpr std::size_t dim = 4;

  BasicMatrix4() = default;
  // Row-major entries.
  BasicMatrix4(std::initializer_list<value_type> entries) {
    if (entries.size() != 16) throw InputError("BasicMatrix4 needs 16 entries");
    std::size_t i = 0;
    for (const auto& v : entries) e_[i++] = v;
  }

  static BasicMatrix4 identity() {
    const value_type one(1);
    return diagonal({one, one, one, one});
  }
  static BasicMatrix4 diagonal(const std::array<value_type, 4>& d) {
    BasicMatrix4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = d[i];
    return m;
  }
  // |u><v|
  static BasicMatrix4 outer(const std::array<value_type, 4>& u, const std::array<value_type, 4>& v) {
    BasicMatrix4 m;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = u[r] * std::conj(v[c]);
    return m;
  }

  value_type& operator()(std::size_t r, std::size_t c) { return e_[4 * r + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return e_[4 * r + c]; }

  BasicMatrix4 adjoint() const {
    BasicMatrix4 out;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) out(r, c) = std::conj((*this)(c, r));
    return out;
  }
  BasicMatrix4 transpose() const {
    BasicMatrix4 out;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) out(r, c) = (*this)(c, r);
    return out;
  }
  value_type trace() const { return e_[0] + e_[5] + e_[10] + e_[15]; }

  // Value conversion between precisions, e.g. double -> Quad for the
  // extended-precision pipeline and back for output.
  template <class Other>
  BasicMatrix4<Other> cast() const {
    BasicMatrix4<Other> out;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        out(r, c) = Complex<Other>(static_cast<Other>((*this)(r, c).real()),
                                   static_cast<Other>((*this)(r, c).imag()));
    return out;
  }

  BasicMatrix4& operator+=(const BasicMatrix4& b) {
    for (std::size_t i = 0; i < 16; ++i) e_[i] += b.e_[i];
    return *this;
  }
  BasicMatrix4& operator-=(const BasicMatrix4& b) {
    for (std::size_t i = 0; i < 16; ++i) e_[i] -= b.e_[i];
    return *this;
  }
  BasicMatrix4& operator*=(const value_type& s) {
    for (auto& v : e_) v *= s;
    return *this;
  }

  friend BasicMatrix4 operator+(BasicMatrix4 a, const BasicMatrix4& b) { return a += b; }
  friend BasicMatrix4 operator-(BasicMatrix4 a, const BasicMatrix4& b) { return a -= b; }
  friend BasicMatrix4 operator-(BasicMatrix4 a) { return a *= value_type(-1); }
  friend BasicMatrix4 operator*(const value_type& s, BasicMatrix4 a) { return a *= s; }
  friend BasicMatrix4 operator*(BasicMatrix4 a, const value_type& s) { return a *= s; }
  friend BasicMatrix4 operator*(const BasicMatrix4& a, const BasicMatrix4& b) {
    BasicMatrix4 out;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t k = 0; k < 4; ++k) {
        const value_type ark = a(r, k);
        for (std::size_t c = 0; c < 4; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }
  friend bool operator==(const BasicMatrix4&, const BasicMatrix4&) = default;

 private:
  std::array<value_type, 16> e_{};
};

using QMatrix2 = BasicMatrix2<double>;
using QMatrix = BasicMatrix4<double>;

enum class Axis { x, y, z };

// "x", "y" or "z".
Axis parse_axis(std::string_view name);

template <class Real = double>
BasicMatrix2<Real> pauli(Axis axis) {
  using C = Complex<Real>;
  switch (axis) {
    case Axis::x:
      return {C(0), C(1), C(1), C(0)};
    case Axis::y:
      return {C(0), C(0, -1), C(0, 1), C(0)};
    case Axis::z:
      return {C(1), C(0), C(0), C(-1)};
  }
  throw InputError("invalid Pauli axis");
}

inline QMatrix2 pauli(std::string_view axis) { return pauli<double>(parse_axis(axis)); }

// a (x) b with a acting on qubit 1.
template <class Real>
BasicMatrix4<Real> kron(const BasicMatrix2<Real>& a, const BasicMatrix2<Real>& b) {
  BasicMatrix4<Real> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

template <class Real>
BasicMatrix4<Real> commutator(const BasicMatrix4<Real>& a, const BasicMatrix4<Real>& b) {
  return a * b - b * a;
}

template <class Real>
Real max_abs_entry(const BasicMatrix4<Real>& m) {
  using std::abs;
  Real best = 0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const Real v = abs(m(r, c));
      if (v > best) best = v;
    }
  return best;
}

template <class Real>
Real max_abs_diff(const BasicMatrix4<Real>& a, const BasicMatrix4<Real>& b) {
  return max_abs_entry(BasicMatrix4<Real>(a - b));
}

template <class Real>
Real frobenius_norm(const BasicMatrix4<Real>& m) {
  using std::sqrt;
  Real s = 0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) s += std::norm(m(r, c));
  return sqrt(s);
}

template <class Real>
bool is_hermitian(const BasicMatrix4<Real>& m, double tol = tol::hermitian) {
  return max_abs_diff(m, m.adjoint()) <= Real(tol);
}

template <class Real>
bool is_unit_trace(const BasicMatrix4<Real>& m, double tol = tol::trace) {
  using std::abs;
  return abs(m.trace() - Complex<Real>(1)) <= Real(tol);
}

// Hermitian and no eigenvalue below `min_eigenvalue`.
template <class Real>
bool is_psd(const BasicMatrix4<Real>& m, double min_eigenvalue = tol::psd);

// Ascending eigenvalues; column k of `vectors` is the eigenvector of values[k].
template <class Real>
struct EigenSystem {
  std::array<Real, 4> values{};
  BasicMatrix4<Real> vectors;
};

// Cyclic complex Jacobi sweeps in fixed (p, q) order. Throws ContractViolation
// if `m` is not Hermitian within tol::hermitian.
template <class Real>
EigenSystem<Real> hermitian_eigen(const BasicMatrix4<Real>& m);

// Eigenvalues only, ascending.
template <class Real>
std::array<Real, 4> hermitian_eigenvalues(const BasicMatrix4<Real>& m) {
  return hermitian_eigen(m).values;
}

// V diag(f(lambda)) V^dagger for a Hermitian m; the test suites use this as
// the dense matrix-function oracle.
template <class Real, class F>
BasicMatrix4<Real> apply_spectral_function(const BasicMatrix4<Real>& m, F&& f) {
  const auto es = hermitian_eigen(m);
  std::array<Complex<Real>, 4> d;
  for (std::size_t k = 0; k < 4; ++k) d[k] = f(es.values[k]);
  return es.vectors * BasicMatrix4<Real>::diagonal(d) * es.vectors.adjoint();
}

enum class Qubit { first = 1, second = 2 };

// 1 -> first, 2 -> second, anything else -> InputError.
Qubit qubit_from_index(int index);

// Transpose the indices of one qubit only.
template <class Real>
BasicMatrix4<Real> partial_transpose(const BasicMatrix4<Real>& m, Qubit qubit);

// Sum of |eigenvalues| of a Hermitian matrix.
template <class Real>
Real trace_norm(const BasicMatrix4<Real>& m);

// A validated two-qubit state: Hermitian, unit trace, eigenvalues >= tol::psd.
// Eigenvalues in [tol::psd, 0) are clamped to zero on construction.
template <class Real>
class BasicDensityMatrix {
 public:
  using matrix_type = BasicMatrix4<Real>;

  // Throws ContractViolation if `m` is not a state.
  explicit BasicDensityMatrix(const matrix_type& m);

  // |psi><psi| / <psi|psi>. Throws InputError for the zero vector.
  static BasicDensityMatrix pure(const std::array<Complex<Real>, 4>& psi);
  static BasicDensityMatrix maximally_mixed();

  const matrix_type& matrix() const { return mat_; }
  const Complex<Real>& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

  template <class Other>
  BasicDensityMatrix<Other> cast() const {
    return BasicDensityMatrix<Other>(mat_.template cast<Other>());
  }

 private:
  matrix_type mat_;
};

using DensityMatrix = BasicDensityMatrix<double>;

template <class Real>
BasicMatrix4<Real> partial_transpose(const BasicDensityMatrix<Real>& rho, Qubit qubit) {
  return partial_transpose(rho.matrix(), qubit);
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

}  // namespace trapdirac
