#pragma once

#include <stdexcept>
#include <string>

namespace los {

// Input or precondition failure. The CLI maps this family to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A coordinate (or other key) that does not exist in the instance.
class LookupError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Caller broke an API contract (mismatched dimensions, shapes, ...).
class ContractViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A configured size bound was exceeded (window budget, oracle caps).
// The CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace los
