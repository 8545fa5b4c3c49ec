#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyc {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Operands live in different rings (variable count, domain or grading).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// A coefficient or operation is not available in the coefficient domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

// Raised by the Groebner engine when the reduction budget runs out.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cyc
