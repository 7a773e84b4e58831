#pragma once

#include <stdexcept>
#include <string>

namespace trapdirac {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something outside an operation's domain (bad axis, negative
// time, unknown preset, malformed config line).
class InputError : public Error {
 public:
  using Error::Error;
};

// A precondition the caller was responsible for does not hold, e.g. a
// non-Hermitian matrix handed to the Hermitian eigensolver.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// c2 vanishes (relative to c1^2): the closed-form ansatz needs four distinct
// eigenvalues.
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

// The library's own algebra failed a self-check (non-pure ansatz projector,
// non-commuting H and O, unconverged eigensolver).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trapdirac
