#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace f5b {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Modulus handed to a prime field is not prime (or out of range).
class NotPrime : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("monomial is not divisible") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomials belong to different rings") {}
};

class InputError : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public Error {
 public:
  explicit DegreeCapExceeded(unsigned degree, unsigned cap)
      : Error("critical pair of degree " + std::to_string(degree) +
              " exceeds the configured cap " + std::to_string(cap)),
        degree_(degree) {}
  unsigned degree() const noexcept { return degree_; }

 private:
  unsigned degree_;
};

class PairLimitExceeded : public Error {
 public:
  explicit PairLimitExceeded(std::uint64_t limit)
      : Error("more than " + std::to_string(limit) + " critical pairs created"), limit_(limit) {}
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

class EmptySet : public Error {
 public:
  EmptySet() : Error("critical pair set is empty") {}
};

class NotHomogeneous : public Error {
 public:
  NotHomogeneous() : Error("matrix F5 requires homogeneous input") {}
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in a system file; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace f5b
