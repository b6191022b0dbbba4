#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dalg {

enum class ErrorCode {
  DivisionByZero,
  RingMismatch,
  IndexOutOfRange,
  InvalidRing,
  ElementOfBaseRing,
  NotAutoreduced,
  ZeroSeparant,
  ZeroSeparantInCharset,
  ExtrasNotPartiallyReduced,
  UnitIdeal,
  BudgetExceeded,
  SyntaxError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when eliminating a proper derivative of u_g needs S(g) but S(g) = 0.
// `element` is the index of g in the autoreduced set it was taken from.
class ZeroSeparantError : public Error {
 public:
  ZeroSeparantError(std::size_t element, const std::string& what)
      : Error(ErrorCode::ZeroSeparant, what), element_(element) {}

  std::size_t element() const noexcept { return element_; }

 private:
  std::size_t element_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dalg
