#ifndef NOMACR_ERRORS_HPP
#define NOMACR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nomacr {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parallel input lists disagree in length or shape.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of an operation (non-positive gain,
/// index out of range, empty admitted set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested allocation cannot meet the thresholds within the budget.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds what an exhaustive verifier is willing to enumerate.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace nomacr

#endif  // NOMACR_ERRORS_HPP
