#include "gpd/error.hpp"

namespace gpd {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameters:
      return "invalid-parameters";
    case ErrorCode::Divergence:
      return "divergence";
    case ErrorCode::QuadratureFailure:
      return "quadrature-failure";
    case ErrorCode::EmptyInput:
      return "empty-input";
    case ErrorCode::MalformedInput:
      return "malformed-input";
    case ErrorCode::NonMonotoneInput:
      return "non-monotone-input";
    case ErrorCode::InsufficientData:
      return "insufficient-data";
    case ErrorCode::FitFailure:
      return "fit-failure";
    case ErrorCode::Io:
      return "io-error";
    case ErrorCode::Usage:
      return "usage";
  }
  return "unknown";
}

}  // namespace gpd
