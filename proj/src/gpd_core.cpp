#include "gpd/gpd_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpd/error.hpp"

namespace gpd {

namespace {

void check_shape(double rate, double threshold, double exponent) {
  if (!(std::isfinite(rate) && rate > 0.0)) {
    throw Error(ErrorCode::InvalidParameters,
                "rate B must be positive and finite, got " + std::to_string(rate));
  }
  if (!(std::isfinite(threshold) && threshold > 0.0)) {
    throw Error(ErrorCode::InvalidParameters,
                "threshold x_t must be positive and finite, got " +
                    std::to_string(threshold));
  }
  if (!std::isfinite(exponent)) {
    throw Error(ErrorCode::InvalidParameters, "Pareto exponent must be finite");
  }
  if (!(exponent > 1.0)) {
    throw Error(ErrorCode::Divergence,
                "Pareto exponent must exceed 1 for the mean income to converge, got " +
                    std::to_string(exponent));
  }
}

void check_income(double x) {
  if (std::isnan(x) || x < 0.0) {
    throw Error(ErrorCode::InvalidParameters,
                "normalized income must be non-negative, got " + std::to_string(x));
  }
}

}  // namespace

double theoretical_location() noexcept {
  static const double value = std::log(std::log(100.0));
  return value;
}

double tail_amplitude_from_constraint(double rate, double threshold,
                                      double exponent, double location) {
  check_shape(rate, threshold, exponent);
  if (!std::isfinite(location)) {
    throw Error(ErrorCode::InvalidParameters, "location A must be finite");
  }
  return std::pow(threshold, exponent) *
         std::exp(std::exp(location - rate * threshold));
}

GpdParams GpdParams::from_shape(double rate, double threshold, double exponent) {
  return with_location(theoretical_location(), rate, threshold, exponent);
}

GpdParams GpdParams::with_location(double location, double rate,
                                   double threshold, double exponent) {
  const double amplitude =
      tail_amplitude_from_constraint(rate, threshold, exponent, location);
  return GpdParams(location, rate, threshold, exponent, amplitude, true);
}

GpdParams GpdParams::unconstrained(double location, double rate,
                                   double threshold, double exponent,
                                   double amplitude) {
  check_shape(rate, threshold, exponent);
  if (!std::isfinite(location)) {
    throw Error(ErrorCode::InvalidParameters, "location A must be finite");
  }
  if (!(std::isfinite(amplitude) && amplitude > 0.0)) {
    throw Error(ErrorCode::InvalidParameters,
                "tail amplitude must be positive and finite");
  }
  return GpdParams(location, rate, threshold, exponent, amplitude, false);
}

double gompertz_ccdf(double x, const GpdParams& p) {
  // The inner exponent is bounded above by A for x >= 0, so this never
  // overflows; far in the body it saturates at exp(0) = 1.
  return std::exp(std::exp(p.location() - p.rate() * x));
}

double gompertz_density(double x, const GpdParams& p) {
  const double inner = std::exp(p.location() - p.rate() * x);
  return p.rate() * inner * std::exp(inner);
}

double pareto_ccdf(double x, const GpdParams& p) {
  return p.tail_amplitude() * std::pow(x, -p.tail_exponent());
}

double pareto_density(double x, const GpdParams& p) {
  return p.tail_exponent() * p.tail_amplitude() *
         std::pow(x, -(1.0 + p.tail_exponent()));
}

double ccdf(double x, const GpdParams& p) {
  check_income(x);
  // exp(exp(ln ln 100)) rounds to a hair above 100.
  return x < p.threshold() ? std::min(100.0, gompertz_ccdf(x, p)) : pareto_ccdf(x, p);
}

double cdf(double x, const GpdParams& p) { return 100.0 - ccdf(x, p); }

double density(double x, const GpdParams& p) {
  check_income(x);
  return x < p.threshold() ? gompertz_density(x, p) : pareto_density(x, p);
}

ExponentialApprox exponential_approximation(double x, double rate) {
  if (!std::isfinite(x) || !std::isfinite(rate)) {
    throw Error(ErrorCode::InvalidParameters,
                "exponential approximation needs finite arguments");
  }
  const double z = std::exp(-rate * x);
  return ExponentialApprox{
      .ccdf = 1.0 + z,
      .density = rate * z,
      .remainder_bound = 0.5 * z * z * std::exp(z),
      .expansion_valid = z < 1.0,
  };
}

}  // namespace gpd
