#pragma once

#include <stdexcept>
#include <string>

namespace nonperiod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An intermediate value or the step count crossed its cap. Recoverable:
// retry with a larger budget. what() names the exhausted cap.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Malformed call: argument count does not match the expression's arity,
// or an expression was assembled from parts of incompatible arity.
struct ArityMismatch : Error {
  using Error::Error;
};

// Digit emission could not separate the enclosure from a decimal boundary
// within the configured number of ternary terms.
struct AmbiguousAtBudget : Error {
  using Error::Error;
};

// The doubling schedule hit max_n before successive grids agreed.
struct NoConvergenceAtBudget : Error {
  using Error::Error;
};

// Bad input file (JSON syntax, schema, or value errors); what() carries a
// field or position diagnostic.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace nonperiod
