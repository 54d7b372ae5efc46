#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simplexbound {

enum class ErrorCode {
  NonzeroConstantTerm,
  SyntaxError,
  NonIntegerCoefficient,
  ZeroPolynomial,
  IndexOutOfRange,
  DimensionMismatch,
  DegreeTooSmall,
  SizeOverflow,
  ConsistencyFailure,
  TraceBoundViolation,
  NonIntegralCoefficient,
  PositivityViolated,
  ParityViolation,
  DimensionTooLarge,
  RootFindingFailure,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace simplexbound
