#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apery {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c_L(n) vanished at an index the iteration needed.
class SingularLeadingCoefficient : public Error {
 public:
  explicit SingularLeadingCoefficient(std::int64_t n)
      : Error("leading coefficient vanishes at n = " + std::to_string(n)), index_(n) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InsufficientTerms : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroSolution : public Error {
 public:
  explicit DivisionByZeroSolution(std::int64_t n)
      : Error("denominator solution vanishes at n = " + std::to_string(n)), index_(n) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class NonpositiveDelta : public Error {
 public:
  using Error::Error;
};

class NonInvertibleDenominator : public Error {
 public:
  using Error::Error;
};

class MultipleRealRoots : public Error {
 public:
  using Error::Error;
};

/// Input file syntax error; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace apery
