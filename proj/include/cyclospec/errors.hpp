#pragma once

#include <stdexcept>
#include <string>

namespace cyclospec {

// Index or parameter outside the domain an operation is defined on.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DivisionByZeroPolynomial : public std::domain_error {
 public:
  DivisionByZeroPolynomial() : std::domain_error("division by the zero polynomial") {}
};

class NonIntegralQuotient : public std::domain_error {
 public:
  NonIntegralQuotient() : std::domain_error("quotient or remainder has non-integer coefficients") {}
};

class ZeroPolynomialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IdentityGeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonSymmetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cyclospec
