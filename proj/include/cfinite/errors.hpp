#pragma once

#include <stdexcept>
#include <string>

namespace cfinite {

// Base for every error the library raises deliberately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (bad arity, non-series GF, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Minimal order of the input does not match the requested factor orders.
class OrderMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Characteristic polynomial has (numerically) repeated roots.
class DegenerateRoots : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Rational reconstruction failed at every precision of the retry ladder.
class PrecisionInsufficient : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// Input exceeds the practical size ceiling of an enumerator.
class ResourceError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A theoretical guarantee failed; this always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cfinite
