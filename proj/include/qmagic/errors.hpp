#pragma once

#include <stdexcept>
#include <string>

namespace qmagic {

// Input vector has (numerically) zero norm and cannot be normalized.
struct ZeroVectorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A matrix that was required to be unitary is not, within tolerance.
struct NotUnitaryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of the function.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A root/iteration failed to converge. Indicates a coding error, not bad input.
struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group closure exceeded its hard size cap (canonicalization bug).
struct ClosureOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qmagic
