#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gpd/error.hpp"
#include "gpd/quadrature.hpp"
#include "gpd/sampling.hpp"
#include "support/generators.hpp"

using gpd::GpdParams;

namespace {

const GpdParams k1981 = GpdParams::from_shape(0.342, 7.533, 2.839);

}  // namespace

TEST_CASE("inverse CCDF at reference levels") {
  CHECK(gpd::inverse_ccdf(100.0, k1981) == 0.0);
  CHECK(gpd::inverse_ccdf(1.419, k1981) == doctest::Approx(7.533).epsilon(1e-3 / 7.533));
  for (double bad : {0.0, -1.0, 100.0000001, std::nan("")}) {
    CHECK_THROWS_AS(gpd::inverse_ccdf(bad, k1981), gpd::Error);
  }
  double prev = INFINITY;
  for (double v = 0.001; v <= 100.0; v += 0.01) {
    const double x = gpd::inverse_ccdf(v, k1981);
    CHECK(x < prev);
    prev = x;
  }
}

TEST_CASE("both inverse branches meet at the threshold") {
  gen::ParamGenerator g(41);
  for (int i = 0; i < 200; ++i) {
    const auto p = g.params();
    const double v = gpd::ccdf(p.threshold(), p);
    const double pareto = std::pow(p.tail_amplitude() / v, 1.0 / p.tail_exponent());
    const double gompertz = (p.location() - std::log(std::log(v))) / p.rate();
    REQUIRE(pareto == doctest::Approx(p.threshold()).epsilon(1e-9));
    // d(ln ln v) = dv / (v ln v): once v is within a few ulps of 1 the
    // double logarithm can only be as precise as its argument allows.
    const double conditioning = 4e-16 / (std::log(v) * p.rate() * p.threshold());
    // At v == 1 exactly the body has rounded flat and only the tail formula
    // applies.
    if (v > 1.0) {
      REQUIRE(gompertz == doctest::Approx(p.threshold()).epsilon(1e-9 + conditioning));
    }
    REQUIRE(gpd::inverse_ccdf(v, p) == doctest::Approx(p.threshold()).epsilon(1e-9));
  }
}

TEST_CASE("CCDF and its inverse round-trip") {
  gen::ParamGenerator g(43);
  for (int i = 0; i < 200; ++i) {
    const auto p = g.params();
    const double xt = p.threshold();
    for (double v = 0.01; v < 100.0; v *= 1.37) {
      REQUIRE(gpd::ccdf(gpd::inverse_ccdf(v, p), p) == doctest::Approx(v).epsilon(1e-9));
    }
    for (double frac = 0.01; frac < 30.0; frac *= 1.21) {
      if (std::abs(frac - 1.0) < 0.02) continue;
      const double x = frac * xt;
      // Where the body has flattened to F = 1 + tiny, F no longer pins x
      // down in double precision.
      if (x < xt && std::exp(p.location() - p.rate() * x) < 1e-6) continue;
      REQUIRE(gpd::inverse_ccdf(gpd::ccdf(x, p), p) == doctest::Approx(x).epsilon(1e-8));
    }
  }
}

TEST_CASE("sampling is reproducible and independent of worker count") {
  const auto a = gpd::draw({.n = 200'000, .seed = 7}, k1981, 1);
  const auto b = gpd::draw({.n = 200'000, .seed = 7}, k1981, 4);
  const auto c = gpd::draw({.n = 200'000, .seed = 8}, k1981, 1);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(gpd::draw({.n = 10, .seed = 7}, k1981) == gpd::draw({.n = 10, .seed = 7}, k1981));
  const auto s = gpd::sample({.n = 1000, .seed = 7}, k1981);
  CHECK(s.normalization_constant() == 1.0);
  CHECK_THROWS_AS(gpd::draw({.n = 0, .seed = 7}, k1981), gpd::Error);
  CHECK_THROWS_AS(gpd::sample({.n = 1, .seed = 7}, k1981), gpd::Error);
  CHECK(gpd::draw({.n = 1, .seed = 7}, k1981).size() == 1);
}

TEST_CASE("large sample matches the model") {
  const auto x = gpd::draw({.n = 1'000'000, .seed = 42}, k1981);
  const double n = static_cast<double>(x.size());
  const double p = gpd::ccdf(k1981.threshold(), k1981) / 100.0;
  const auto above = std::count_if(x.begin(), x.end(), [](double v) { return v >= 7.533; });
  CHECK(std::abs(static_cast<double>(above) / n - p) < 3 * std::sqrt(p * (1 - p) / n));

  const long double sum = std::accumulate(x.begin(), x.end(), 0.0L);
  const long double sq = std::accumulate(x.begin(), x.end(), 0.0L,
                                         [](long double s, double v) { return s + v * v; });
  const double mean = static_cast<double>(sum / n);
  const double sd = std::sqrt(static_cast<double>(sq / n) - mean * mean);
  CHECK(std::abs(mean - gpd::mean_income(k1981)) < 3 * sd / std::sqrt(n));
}

TEST_CASE("Kolmogorov-Smirnov distance stays below the 1% critical value") {
  const std::size_t n = 100'000;
  const double critical = 1.628 / std::sqrt(static_cast<double>(n));
  int passes = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    auto x = gpd::draw({.n = n, .seed = 5000 + trial}, k1981);
    std::sort(x.begin(), x.end());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double F = gpd::cdf(x[i], k1981) / 100.0;
      d = std::max({d, static_cast<double>(i + 1) / n - F, F - static_cast<double>(i) / n});
    }
    if (d < critical) ++passes;
  }
  CHECK(passes >= 95);
}
