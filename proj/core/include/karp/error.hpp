#pragma once

#include <stdexcept>
#include <string>

namespace karp {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An order n outside the admissible range.
class InvalidOrderError : public Error {
 public:
  using Error::Error;
};

/// Two fractions that were expected in increasing order were not.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// A fraction whose denominator exceeds the order it is tested against.
class OutOfOrderError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A real parameter (usually alpha) outside [0, 1].
class ParameterError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class StateError : public Error {
 public:
  using Error::Error;
};

/// The point is a multiple root, so the tangent does not exist.
class MultipleRootError : public Error {
 public:
  using Error::Error;
};

/// Root continuation failed; carries the parameter value where it happened.
class TraceError : public Error {
 public:
  TraceError(const std::string& what, double alpha) : Error(what), alpha_(alpha) {}
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

}  // namespace karp
