#pragma once

#include <boost/multiprecision/float128.hpp>

namespace trapdirac {

// IEEE binary128. Used where the observable of interest sits far below the
// double-precision floor (cat-state negativity late in the decay).
using Quad = boost::multiprecision::float128;

// Validation tolerances shared by every module.
namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
// Smallest eigenvalue a density matrix may have before it is rejected;
// anything in [psd, 0) is roundoff and gets clamped.
inline constexpr double psd = -1e-10;
}  // namespace tol

// Relative off-diagonal threshold for the Jacobi sweeps. The double value is
// the 1e-14 convergence target; binary128 gets a proportionally tighter one.
template <class Real>
struct JacobiTraits;

template <>
struct JacobiTraits<double> {
  static constexpr double off_threshold = 1e-14;
};

template <>
struct JacobiTraits<Quad> {
  static constexpr double off_threshold = 1e-31;
};

}  // namespace trapdirac
