#pragma once

#include <stdexcept>
#include <string>

namespace fraclap {

/// An argument lies outside the window in which a quantity is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series, quadrature or extrapolation failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fraclap
