#pragma once

#include <stdexcept>
#include <string>

namespace qwl {

// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input: self-loops, endpoints out of range, bad JSON.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Parameter outside the mathematical domain of an operation (n < 2 for a
// host, k > 3^n for the isoperimetric function, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an exhaustive oracle or for the configured size cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class UnreachableError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition (unknown guest edge, routing
// that does not fit the host, unverified cut family, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Internal arithmetic did not close up, e.g. a cut total not divisible by
// the family multiplicity. Indicates a malformed family or a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwl
