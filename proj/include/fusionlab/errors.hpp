#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusionlab {

// Base of every exception the engine throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t expected, std::size_t got)
      : Error("degree mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Enumeration cap, group-order cap, lattice cap or per-task deadline hit.
// Callers report these as skips; they are never verdicts.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed. Always an
// engine bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fusionlab
