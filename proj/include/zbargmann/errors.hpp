#pragma once

#include <stdexcept>
#include <string>

namespace zbargmann {

// Caller supplied something malformed: wrong dimension, index out of range,
// non-Hermitian Hamiltonian, unreadable file.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical invariant did not hold. Carries the measured residual.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace zbargmann
