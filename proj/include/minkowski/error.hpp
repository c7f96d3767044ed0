#pragma once

#include <stdexcept>
#include <string>

namespace minkowski {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (dimension mismatch, zero vector, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Vertex set of a ball is not closed under negation.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// Point set does not span the space, or the origin is not interior.
class DegenerateBall : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds the range handled by an exact routine.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace minkowski
