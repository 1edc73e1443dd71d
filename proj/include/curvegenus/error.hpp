#ifndef CURVEGENUS_ERROR_HPP
#define CURVEGENUS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace curvegenus {

/// Base of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain (negative binomial inputs,
/// degenerate degrees, r outside a proposition's classes, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A fixed Hilbert-function value lies strictly below its closed lower bound.
class InfeasibleError : public Error {
 public:
  InfeasibleError(long index, long fixed_value, long closed_value)
      : Error("infeasible constraints at index " + std::to_string(index) +
              ": fixed value " + std::to_string(fixed_value) +
              " is below the closed lower bound " +
              std::to_string(closed_value)),
        index_(index) {}

  InfeasibleError(long index, const std::string& reason)
      : Error("infeasible constraints at index " + std::to_string(index) + ": " + reason),
        index_(index) {}

  long index() const { return index_; }

 private:
  long index_;
};

/// Kernel dimension did not stabilize within the sample budget.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Malformed input documents (constraint files, surface descriptors).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvegenus

#endif  // CURVEGENUS_ERROR_HPP
