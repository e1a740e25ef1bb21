#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgenum {

// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix or index map sizes do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was called on input that violates its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A word failed the admissibility checks (some needed product is undefined).
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

// Data is well formed but describes an inconsistent object.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pgenum
