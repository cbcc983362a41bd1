#ifndef LUMBRAL_ERRORS_HPP
#define LUMBRAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lumbral {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary series operation on operands with different truncation orders.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Truncation too short for the requested operation, or an inner series with
// nonzero constant term handed to composition.
class OrderError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

// Parameter outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

// (g, f) violates o(g) = 0, o(f) = 1.
class PairError : public Error {
 public:
  using Error::Error;
};

// Incompatible parameters between two objects (e.g. different lambda).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lumbral

#endif  // LUMBRAL_ERRORS_HPP
