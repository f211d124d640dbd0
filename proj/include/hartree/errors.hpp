#pragma once

#include <stdexcept>
#include <string>

namespace hartree {

// Precondition violations on integrals (divergent tails and the like).
struct IntegrabilityError : std::runtime_error {
  explicit IntegrabilityError(const std::string &what)
      : std::runtime_error(what) {}
};

// A computation that ran but failed to meet its accuracy or convergence
// contract. Carries enough text to diagnose (achieved tolerance, iteration
// counts).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace hartree
