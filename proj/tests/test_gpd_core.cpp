#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "gpd/error.hpp"
#include "gpd/gpd_core.hpp"
#include "gpd/quadrature.hpp"
#include "support/generators.hpp"

using gpd::GpdParams;

namespace {

const GpdParams k1981 = GpdParams::from_shape(0.342, 7.533, 2.839);

bool throws_code(auto&& f, gpd::ErrorCode code) {
  try {
    f();
  } catch (const gpd::Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("theoretical location is ln(ln 100)") {
  const double A = gpd::theoretical_location();
  CHECK(std::round(A * 1e5) / 1e5 == doctest::Approx(1.52718).epsilon(1e-12));
  CHECK(A == doctest::Approx(1.5271796258079011).epsilon(1e-15));
  CHECK(std::exp(std::exp(A)) == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("tail amplitude from the continuity constraint") {
  const double A = 1.52718;
  CHECK(gpd::tail_amplitude_from_constraint(0.342, 7.533, 2.839, A) ==
        doctest::Approx(438.0).epsilon(0.01));
  CHECK(gpd::tail_amplitude_from_constraint(0.327, 7.910, 3.749, A) ==
        doctest::Approx(3295.0).epsilon(0.01));
  for (double a : {-3.0, 0.5, 1.52718, 4.0}) {
    CHECK(gpd::tail_amplitude_from_constraint(a > 0 ? a : 1.0, 1.0, 2.0, a > 0 ? a : 1.0) ==
          doctest::Approx(std::numbers::e).epsilon(1e-14));
  }
  CHECK(k1981.tail_amplitude() == doctest::Approx(438.35298).epsilon(1e-7));
}

TEST_CASE("parameter validation") {
  using gpd::ErrorCode;
  CHECK(throws_code([] { GpdParams::from_shape(0.0, 7.5, 2.8); }, ErrorCode::InvalidParameters));
  CHECK(throws_code([] { GpdParams::from_shape(-1.0, 7.5, 2.8); }, ErrorCode::InvalidParameters));
  CHECK(throws_code([] { GpdParams::from_shape(0.3, 0.0, 2.8); }, ErrorCode::InvalidParameters));
  CHECK(throws_code([] { GpdParams::from_shape(0.3, 7.5, 1.0); }, ErrorCode::Divergence));
  CHECK(throws_code([] { GpdParams::from_shape(0.3, 7.5, 0.5); }, ErrorCode::Divergence));
  CHECK(throws_code([] { GpdParams::from_shape(NAN, 7.5, 2.0); }, ErrorCode::InvalidParameters));
  CHECK(throws_code([] { gpd::ccdf(-0.1, k1981); }, ErrorCode::InvalidParameters));
  CHECK(throws_code([] { gpd::density(-0.1, k1981); }, ErrorCode::InvalidParameters));
  CHECK(throws_code([] { GpdParams::unconstrained(1.5, 0.3, 7.5, 2.8, -1.0); },
                    ErrorCode::InvalidParameters));
}

TEST_CASE("ccdf and cdf at reference points") {
  CHECK(gpd::ccdf(0.0, k1981) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(gpd::cdf(0.0, k1981) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(gpd::ccdf(7.533, k1981) == doctest::Approx(1.4194232147).epsilon(1e-9));
  CHECK(gpd::gompertz_ccdf(7.533, k1981) == doctest::Approx(1.4194232147).epsilon(1e-9));
  CHECK(gpd::cdf(7.533, k1981) == doctest::Approx(98.5805767853).epsilon(1e-11));
  CHECK(gpd::ccdf(1e6, k1981) < 1e-14);
  for (double x : {0.0, 0.3, 2.0, 7.533, 11.0, 1e3}) {
    CHECK(gpd::cdf(x, k1981) + gpd::ccdf(x, k1981) == 100.0);
  }
}

TEST_CASE("branch convention at the threshold") {
  const double xt = k1981.threshold();
  CHECK(gpd::density(xt, k1981) == gpd::pareto_density(xt, k1981));
  CHECK(gpd::ccdf(xt, k1981) == gpd::pareto_ccdf(xt, k1981));
  CHECK(gpd::density(std::nextafter(xt, 0.0), k1981) ==
        gpd::gompertz_density(std::nextafter(xt, 0.0), k1981));
}

TEST_CASE("density at zero and as a derivative") {
  CHECK(gpd::density(0.0, k1981) == doctest::Approx(0.342 * std::log(100.0) * 100.0).epsilon(1e-12));
  CHECK(gpd::density(0.0, k1981) == doctest::Approx(157.4968203607928).epsilon(1e-12));
  const double h = 1e-6;
  const double fd = (gpd::ccdf(3.0 + h, k1981) - gpd::ccdf(3.0 - h, k1981)) / (2 * h);
  CHECK(-fd == doctest::Approx(gpd::density(3.0, k1981)).epsilon(1e-6));
}

TEST_CASE("density integrates to 100") {
  const double body = gpd::integrate([](double x) { return gpd::density(x, k1981); }, 0.0,
                                     k1981.threshold());
  CHECK(body + gpd::pareto_ccdf(k1981.threshold(), k1981) == doctest::Approx(100.0).epsilon(1e-10));
}

TEST_CASE("underflow far in the body is graceful") {
  const auto p = GpdParams::from_shape(1.0, 1000.0, 2.0);
  for (double x : {700.0, 745.0, 800.0, 999.0}) {
    CHECK(std::isfinite(gpd::ccdf(x, p)));
    CHECK(std::isfinite(gpd::density(x, p)));
    CHECK(gpd::density(x, p) >= 0.0);
    CHECK(gpd::ccdf(x, p) == doctest::Approx(1.0));
  }
}

TEST_CASE("exponential approximation") {
  const auto e = gpd::exponential_approximation(10.0, 0.342);
  CHECK(e.ccdf == doctest::Approx(1.0327124349).epsilon(1e-10));
  CHECK(e.density == doctest::Approx(0.342 * std::exp(-3.42)).epsilon(1e-14));
  CHECK(e.remainder_bound == doctest::Approx(5.528e-4).epsilon(1e-3));
  CHECK(e.expansion_valid);
  CHECK_FALSE(gpd::exponential_approximation(-1.0, 0.342).expansion_valid);
  CHECK_FALSE(gpd::exponential_approximation(0.0, 0.342).expansion_valid);
  CHECK(gpd::exponential_approximation(1e4, 0.342).ccdf == 1.0);

  for (double bx = 0.01; bx <= 40.0; bx *= 1.07) {
    const auto a = gpd::exponential_approximation(bx, 1.0);
    // exp(exp(-bx)) - (1 + e^-bx) summed as its series, free of cancellation.
    const long double z = std::exp(-bx);
    long double term = z * z / 2, tail = 0;
    for (int k = 3; term > 0 && k < 60; ++k) {
      tail += term;
      term *= z / k;
    }
    CHECK(static_cast<double>(tail) <= a.remainder_bound * (1 + 1e-12));
  }
}

TEST_CASE("random triples satisfy the model invariants") {
  gen::ParamGenerator g(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = g.triple();
    const auto p = GpdParams::from_shape(t.rate, t.threshold, t.exponent);
    const double xt = p.threshold();
    CAPTURE(t.rate);
    CAPTURE(t.threshold);
    CAPTURE(t.exponent);

    REQUIRE(p.location() == doctest::Approx(gpd::theoretical_location()).epsilon(1e-15));
    const double beta = std::pow(xt, t.exponent) * std::exp(std::exp(p.location() - t.rate * xt));
    REQUIRE(p.tail_amplitude() == doctest::Approx(beta).epsilon(1e-9));
    REQUIRE(std::abs(gpd::gompertz_ccdf(xt, p) - gpd::pareto_ccdf(xt, p)) /
                gpd::pareto_ccdf(xt, p) <
            1e-9);

    const double body = gpd::integrate([&](double x) { return gpd::gompertz_density(x, p); },
                                       0.0, xt);
    REQUIRE(std::abs(body + gpd::pareto_ccdf(xt, p) - 100.0) < 1e-8);

    // Monotone on 10^4 points over [0, 100 x_t]. Far in the body the double
    // exponential rounds to exactly 1, so the CCDF is only required not to rise.
    double prev = gpd::ccdf(0.0, p);
    bool monotone = true;
    for (int i = 1; i <= 10000; ++i) {
      const double x = 100.0 * xt * i / 10000.0;
      const double F = gpd::ccdf(x, p);
      monotone = monotone && F <= prev && gpd::density(x, p) > 0.0 &&
                 gpd::cdf(x, p) >= gpd::cdf(100.0 * xt * (i - 1) / 10000.0, p);
      prev = F;
    }
    REQUIRE(monotone);

    // Derivative consistency away from x_t. Fourth-order central differences
    // with a step scaled to the local curvature; points where rounding in F
    // would swamp the density are skipped.
    for (double frac : {0.05, 0.3, 0.6, 0.9, 1.2, 2.0, 5.0}) {
      const double x = frac * xt;
      const double f = gpd::density(x, p);
      const double kappa = frac < 1.0 ? t.rate * (1.0 + std::exp(p.location() - t.rate * x))
                                      : (t.exponent + 2.0) / x;
      double h = 1e-3 / kappa;
      h = std::min(h, 0.25 * std::abs(x - xt));
      const double F = gpd::ccdf(x, p);
      const double eps = std::numeric_limits<double>::epsilon();
      if (eps * F / (h * f) > 1e-7) continue;
      auto c = [&](double y) { return gpd::ccdf(y, p); };
      auto d = [&](double y) { return gpd::cdf(y, p); };
      const double dc = (-c(x + 2 * h) + 8 * c(x + h) - 8 * c(x - h) + c(x - 2 * h)) / (12 * h);
      const double dd = (-d(x + 2 * h) + 8 * d(x + h) - 8 * d(x - h) + d(x - 2 * h)) / (12 * h);
      CAPTURE(x);
      REQUIRE(std::abs(-dc - f) / f < 1e-6);
      if (eps * 100.0 / (h * f) < 1e-7) REQUIRE(std::abs(dd - f) / f < 1e-6);
    }
  }
}
