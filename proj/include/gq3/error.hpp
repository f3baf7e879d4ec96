#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gq3 {

enum class ErrorCode {
  ParamMismatch,
  ZeroNorm,
  NonElliptic,
  DegenerateAxis,
  NonUnit,
  NotUnitVector,
  NotPositiveFamily,
  NoPeriod,
  CongruenceViolation,
  InvalidArgument,
};

/// Stable identifier used in JSON output and the C API
/// (e.g. "ZeroNorm").
std::string_view to_string(ErrorCode code) noexcept;

/// %.17g rendering for error messages.
std::string format_real(double value);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gq3
