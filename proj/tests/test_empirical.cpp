#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gpd/empirical.hpp"
#include "gpd/error.hpp"
#include "gpd/inequality.hpp"
#include "gpd/sampling.hpp"

using gpd::EmpiricalDistribution;
using gpd::GpdParams;
using gpd::Normalization;
using gpd::NormalizationMode;

namespace {

const GpdParams k1981 = GpdParams::from_shape(0.342, 7.533, 2.839);

const EmpiricalDistribution& big_sample() {
  static const auto dist = gpd::sample({.n = 1'000'000, .seed = 42}, k1981);
  return dist;
}

gpd::ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const gpd::Error& e) {
    return e.code();
  }
  FAIL("expected gpd::Error");
  return gpd::ErrorCode::Usage;
}

}  // namespace

TEST_CASE("normalize") {
  const auto mean = gpd::normalize({2, 4, 6}, {NormalizationMode::Mean});
  CHECK(std::vector<double>(mean.values().begin(), mean.values().end()) ==
        std::vector<double>{0.5, 1.0, 1.5});
  CHECK(mean.normalization_constant() == 4.0);

  const auto none = gpd::normalize({3, 1, 2}, {NormalizationMode::None});
  CHECK(std::vector<double>(none.values().begin(), none.values().end()) ==
        std::vector<double>{1, 2, 3});
  CHECK(none.normalization_constant() == 1.0);

  const auto c = gpd::normalize({10, 20}, {NormalizationMode::Constant, 10.0});
  CHECK(c.values()[1] == 2.0);

  std::mt19937_64 rng(9);
  std::lognormal_distribution<double> ln(3.0, 1.2);
  std::vector<double> raw(1000);
  for (double& v : raw) v = ln(rng);
  const auto restored = gpd::denormalize(gpd::normalize(raw, {NormalizationMode::Mean}));
  std::sort(raw.begin(), raw.end());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    CHECK(restored[i] == doctest::Approx(raw[i]).epsilon(1e-12));
  }

  using gpd::ErrorCode;
  CHECK(code_of([] { gpd::normalize({0, 0, 0}, {NormalizationMode::Mean}); }) ==
        ErrorCode::InvalidParameters);
  CHECK(code_of([] { gpd::normalize({0, 0}, {NormalizationMode::None}); }) ==
        ErrorCode::InvalidParameters);
  CHECK(code_of([] { gpd::normalize({1, 2}, {NormalizationMode::Constant, 0.0}); }) ==
        ErrorCode::InvalidParameters);
  CHECK(code_of([] { gpd::normalize({1}, {NormalizationMode::None}); }) ==
        ErrorCode::InsufficientData);
  CHECK(code_of([] { gpd::normalize({}, {NormalizationMode::Mean}); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { gpd::normalize({1, -2}, {NormalizationMode::None}); }) ==
        ErrorCode::InvalidParameters);
}

TEST_CASE("empirical distribution keeps the minimum first") {
  const auto d = EmpiricalDistribution::make({5, 3, 9, 1});
  CHECK(d.values().front() == 1.0);
  CHECK(std::is_sorted(d.values().begin(), d.values().end()));
}

TEST_CASE("empirical CCDF") {
  const auto c = gpd::empirical_ccdf(EmpiricalDistribution::make({1, 2, 3}));
  REQUIRE(c.size() == 3);
  CHECK(c.points()[0].F == 100.0);
  CHECK(c.points()[1].F == doctest::Approx(66.67).epsilon(1e-4));
  CHECK(c.points()[2].F == doctest::Approx(33.33).epsilon(1e-4));

  const auto ties = gpd::empirical_ccdf(EmpiricalDistribution::make({5, 5, 5, 5}));
  REQUIRE(ties.size() == 1);
  CHECK(ties.points()[0].x == 5.0);
  CHECK(ties.points()[0].F == 100.0);

  const auto mixed = gpd::empirical_ccdf(EmpiricalDistribution::make({1, 2, 2, 4}));
  REQUIRE(mixed.size() == 3);
  CHECK(mixed.points()[1].F == 75.0);
  CHECK(mixed.points()[2].F == 25.0);
}

TEST_CASE("binned CCDF validation") {
  using gpd::CcdfPoint;
  using gpd::ErrorCode;
  CHECK(code_of([] { gpd::BinnedCcdf::make({{1, 50}, {2, 60}}); }) == ErrorCode::NonMonotoneInput);
  CHECK(code_of([] { gpd::BinnedCcdf::make({{1, 50}, {1, 40}}); }) == ErrorCode::NonMonotoneInput);
  CHECK(code_of([] { gpd::BinnedCcdf::make({{1, 120}}); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { gpd::BinnedCcdf::make({{1, 0}}); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { gpd::BinnedCcdf::make({}); }) == ErrorCode::EmptyInput);
  try {
    gpd::BinnedCcdf::make({{1, 50}, {2, 40}, {3, 45}});
  } catch (const gpd::Error& e) {
    CHECK(std::string(e.what()).find("2 and 3") != std::string::npos);
  }
}

TEST_CASE("empirical Lorenz curve") {
  const auto eq = gpd::empirical_lorenz(EmpiricalDistribution::make({7, 7, 7}));
  for (const auto& p : eq.points) CHECK(p.income_share == doctest::Approx(p.population_share));

  const auto two = gpd::empirical_lorenz(EmpiricalDistribution::make({0, 3}));
  REQUIRE(two.points.size() == 3);
  CHECK(two.points[0].population_share == 0.0);
  CHECK(two.points[0].income_share == 0.0);
  CHECK(two.points[1].population_share == 50.0);
  CHECK(two.points[1].income_share == 0.0);
  CHECK(two.points[2].population_share == 100.0);
  CHECK(two.points[2].income_share == 100.0);

  CHECK(code_of([] { gpd::empirical_lorenz(EmpiricalDistribution::make({0, 0})); }) ==
        gpd::ErrorCode::InvalidParameters);
}

TEST_CASE("empirical Gini and share on small samples") {
  CHECK(gpd::empirical_gini(EmpiricalDistribution::make({4, 4, 4, 4})) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(gpd::empirical_gini(EmpiricalDistribution::make({0, 2})) == doctest::Approx(0.5));

  const auto d = EmpiricalDistribution::make({1, 2, 3, 4});
  CHECK(gpd::empirical_share(d, 10.0) == 100.0);
  CHECK(gpd::empirical_share(d, 1.0) == 0.0);
  CHECK(gpd::empirical_share(d, 0.5) == 0.0);
  CHECK(gpd::empirical_share(d, 3.0) == doctest::Approx(30.0));
  CHECK_THROWS_AS(gpd::empirical_share(d, 0.0), gpd::Error);
  CHECK(code_of([] { gpd::empirical_share(EmpiricalDistribution::make({0, 0}), 1.0); }) ==
        gpd::ErrorCode::InvalidParameters);
}

TEST_CASE("scale and permutation invariance") {
  std::mt19937_64 rng(31);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> raw(5000);
  for (double& v : raw) v = e(rng);
  const double g = gpd::empirical_gini(EmpiricalDistribution::make(raw));
  for (double c : {1e-3, 0.7, 3.0, 1e5}) {
    std::vector<double> scaled = raw;
    for (double& v : scaled) v *= c;
    CHECK(gpd::empirical_gini(EmpiricalDistribution::make(scaled)) ==
          doctest::Approx(g).epsilon(1e-12));
  }
  const auto base = gpd::empirical_lorenz(EmpiricalDistribution::make(raw));
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(raw.begin(), raw.end(), rng);
    const auto shuffled = gpd::empirical_lorenz(EmpiricalDistribution::make(raw));
    REQUIRE(shuffled.points.size() == base.points.size());
    bool same = true;
    for (std::size_t k = 0; k < base.points.size(); ++k) {
      same = same && shuffled.points[k].income_share == base.points[k].income_share &&
             shuffled.points[k].population_share == base.points[k].population_share;
    }
    CHECK(same);
  }
}

TEST_CASE("estimators on a large model sample") {
  const auto& d = big_sample();
  const double n = static_cast<double>(d.size());

  const auto ccdf = gpd::empirical_ccdf(d);
  const auto pts = ccdf.points();
  const auto at = std::lower_bound(pts.begin(), pts.end(), k1981.threshold(),
                                   [](const gpd::CcdfPoint& p, double x) { return p.x < x; });
  REQUIRE(at != pts.end());
  const double p = gpd::ccdf(k1981.threshold(), k1981) / 100.0;
  const double sd = 100.0 * std::sqrt(p * (1 - p) / n);
  CHECK(std::abs(at->F - 1.4194232147) < 3 * sd);

  const auto grid = gpd::build_first_moment_grid(k1981);
  CHECK(gpd::empirical_gini(d) == doctest::Approx(gpd::gini(grid)).epsilon(0.005 / 0.613));
  CHECK(std::abs(gpd::empirical_share(d, k1981.threshold()) - 82.5) <= 1.0);

  // Largest vertical gap between the sample and model Lorenz curves.
  const auto emp = gpd::empirical_lorenz(d);
  const auto model = gpd::lorenz_curve(grid, 2048);
  double gap = 0.0;
  for (const auto& m : model.points) {
    const double pos = m.population_share / 100.0 * n;
    const auto k = static_cast<std::size_t>(std::min(pos, n - 1));
    const double w = pos - static_cast<double>(k);
    const double e = (1 - w) * emp.points[k].income_share + w * emp.points[k + 1].income_share;
    gap = std::max(gap, std::abs(e - m.income_share));
  }
  CHECK(gap < 0.5);
}

TEST_CASE("estimators converge with sample size") {
  const auto grid = gpd::build_first_moment_grid(k1981);
  const double G = gpd::gini(grid);
  const double u = gpd::gompertz_share(grid);
  const struct {
    std::size_t n;
    double gini_tol;
    double share_tol;
  } steps[] = {{10'000, 0.03, 5.0}, {100'000, 0.015, 2.5}, {1'000'000, 0.005, 1.0}};
  for (const auto& s : steps) {
    const auto d = gpd::sample({.n = s.n, .seed = 1000 + s.n}, k1981);
    CAPTURE(s.n);
    CHECK(std::abs(gpd::empirical_gini(d) - G) < s.gini_tol);
    CHECK(std::abs(gpd::empirical_share(d, k1981.threshold()) - u) < s.share_tol);
  }
}
