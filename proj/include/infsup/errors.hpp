// infsup — inf-sup constants and Fortin operators on finite-dimensional spaces.
//
// Error hierarchy. Two families matter for the CLI exit-code contract:
// InputError (invalid data or dimensions, exit 2) and MathError (a
// mathematical hypothesis fails for valid data, exit 1).

#pragma once

#include <stdexcept>
#include <string>

namespace infsup {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input: bad dimensions, malformed files, violated data invariants.
class InputError : public Error {
  using Error::Error;
};

// A mathematical hypothesis does not hold for otherwise valid data.
class MathError : public Error {
  using Error::Error;
};

class InvalidDims final : public InputError {
  using InputError::InputError;
};

class DimensionMismatch final : public InputError {
  using InputError::InputError;
};

class DimensionTooLarge final : public InputError {
  using InputError::InputError;
};

// A Gram (or induced sub-Gram) matrix failed its Cholesky factorization.
class NotPositiveDefinite final : public InputError {
  using InputError::InputError;
};

class ParseError final : public InputError {
  using InputError::InputError;
};

class SchemaVersionMismatch final : public InputError {
  using InputError::InputError;
};

// A loaded or constructed object violates one of its stated invariants;
// the message names the invariant.
class ValidationError final : public InputError {
  using InputError::InputError;
};

// The discrete inf-sup condition fails: no bounded right inverse exists.
class InfSupFailure final : public MathError {
  using MathError::MathError;
};

class NotSurjective final : public MathError {
  using MathError::MathError;
};

class NotBijective final : public MathError {
  using MathError::MathError;
};

class NotADecomposition final : public MathError {
  using MathError::MathError;
};

// Rank test and inf-sup estimate disagree (search resolution too low).
class InconsistentCriteria final : public MathError {
  using MathError::MathError;
};

class SolverStall final : public MathError {
  using MathError::MathError;
};

}  // namespace infsup
