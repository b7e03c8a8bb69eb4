#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpd {

enum class ErrorCode {
  InvalidParameters,
  Divergence,
  QuadratureFailure,
  EmptyInput,
  MalformedInput,
  NonMonotoneInput,
  InsufficientData,
  FitFailure,
  Io,
  Usage,
};

/// Stable machine-readable name, e.g. "empty-input".
std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can surface it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gpd
