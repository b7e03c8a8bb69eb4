#pragma once

// Gompertz-Pareto model of personal income.
//
// Incomes are normalized (divided by a nominal average) and probabilities are
// expressed in percent, so the complementary CCDF runs from F(0) = 100 down to
// 0. Below the threshold x_t the CCDF is the Gompertz curve
// exp(exp(A - B x)); from x_t on it is the power law beta * x^-alpha.

namespace gpd {

/// ln(ln 100): the location that makes the Gompertz branch start at F(0) = 100.
double theoretical_location() noexcept;

/// Tail amplitude that makes the two CCDF branches meet at the threshold:
/// threshold^exponent * exp(exp(location - rate * threshold)).
double tail_amplitude_from_constraint(double rate, double threshold,
                                      double exponent, double location);

/// The five distribution parameters. Only three are free: the location is
/// ln(ln 100) unless requested otherwise and the tail amplitude always comes
/// from the continuity constraint, except for `unconstrained`, which exists so
/// sensitivity analysis can perturb the amplitude on its own.
class GpdParams {
 public:
  /// Rate B, threshold x_t and Pareto exponent alpha, theoretical location.
  static GpdParams from_shape(double rate, double threshold, double exponent);

  /// Same, with an explicit location A; the amplitude still follows the
  /// continuity constraint.
  static GpdParams with_location(double location, double rate, double threshold,
                                 double exponent);

  /// All five parameters taken verbatim. The CCDF is discontinuous at x_t
  /// unless the amplitude happens to satisfy the constraint.
  static GpdParams unconstrained(double location, double rate, double threshold,
                                 double exponent, double amplitude);

  [[nodiscard]] double location() const noexcept { return location_; }
  [[nodiscard]] double rate() const noexcept { return rate_; }
  [[nodiscard]] double threshold() const noexcept { return threshold_; }
  [[nodiscard]] double tail_exponent() const noexcept { return exponent_; }
  [[nodiscard]] double tail_amplitude() const noexcept { return amplitude_; }
  [[nodiscard]] bool constrained() const noexcept { return constrained_; }

  friend bool operator==(const GpdParams&, const GpdParams&) = default;

 private:
  GpdParams(double location, double rate, double threshold, double exponent,
            double amplitude, bool constrained)
      : location_(location),
        rate_(rate),
        threshold_(threshold),
        exponent_(exponent),
        amplitude_(amplitude),
        constrained_(constrained) {}

  double location_;
  double rate_;
  double threshold_;
  double exponent_;
  double amplitude_;
  bool constrained_;
};

/// Gompertz CCDF branch G(x) = exp(exp(A - B x)), any x >= 0.
double gompertz_ccdf(double x, const GpdParams& p);
/// Gompertz density branch g(x) = B e^(A - B x) exp(e^(A - B x)).
double gompertz_density(double x, const GpdParams& p);
/// Pareto CCDF branch P(x) = beta x^-alpha, x > 0.
double pareto_ccdf(double x, const GpdParams& p);
/// Pareto density branch p(x) = alpha beta x^-(1 + alpha).
double pareto_density(double x, const GpdParams& p);

/// Percentage of individuals with income >= x, at most 100. The Pareto branch
/// owns x_t.
double ccdf(double x, const GpdParams& p);
/// Percentage of individuals with income <= x, i.e. 100 - ccdf.
double cdf(double x, const GpdParams& p);
/// Income density in percent per unit of normalized income.
double density(double x, const GpdParams& p);

struct ExponentialApprox {
  double ccdf;             // 1 + e^-Bx
  double density;          // B e^-Bx
  double remainder_bound;  // (1/2) e^-2Bx exp(e^-Bx)
  bool expansion_valid;    // e^-Bx < 1
};

/// Two-term expansion of exp(exp(-B x)) for the middle of the body. Diagnostic
/// only; no model function uses it.
ExponentialApprox exponential_approximation(double x, double rate);

}  // namespace gpd
