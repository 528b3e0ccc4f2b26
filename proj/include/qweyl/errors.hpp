#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings (different modulus or indeterminate).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Division by zero, inversion of a non-unit, inexact division.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A constructor precondition failed (bad family parameters, guard violations).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Square matrix whose determinant is not a unit of the entry ring.
class SingularMatrix : public DomainError {
 public:
  SingularMatrix(const std::string& what, std::string det)
      : DomainError(what + " (determinant " + det + ")"), det_(std::move(det)) {}
  const std::string& determinant() const { return det_; }

 private:
  std::string det_;
};

}  // namespace qweyl
