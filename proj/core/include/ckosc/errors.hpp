#pragma once

#include <stdexcept>
#include <string>

namespace ckosc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument (non-positive mass, n out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// gamma >= 2 omega0: the critical and overdamped regimes are not supported.
class NotUnderdamped : public InvalidArgument {
 public:
  explicit NotUnderdamped(const std::string& what) : InvalidArgument("not underdamped: " + what) {}
};

/// A mode function whose Wronskian differs from i beyond the acceptance tolerance.
class WronskianViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The literal coherent-state phase factor divides by u'* u*, which vanished.
class SingularPhase : public Error {
 public:
  using Error::Error;
};

/// Crank-Nicolson evolution pushed probability mass onto the Dirichlet boundary.
class BoundaryLeak : public Error {
 public:
  using Error::Error;
};

}  // namespace ckosc
