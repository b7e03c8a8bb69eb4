#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gpd/empirical.hpp"
#include "gpd/gpd_core.hpp"

namespace gpd {

struct SampleSpec {
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// Income at which the model CCDF equals v, for 0 < v <= 100. Values at or
/// below F(x_t) come from the Pareto branch, the rest from the Gompertz one.
double inverse_ccdf(double v, const GpdParams& p);

/// Draws spec.n >= 1 incomes, in generation order, by inverse transform of
/// v uniform on (0, 100].
///
/// The index range is cut into fixed blocks, each with its own generator
/// seeded from (seed, block), so the sample does not depend on how many worker
/// threads run. `workers == 0` uses the hardware concurrency.
std::vector<double> draw(const SampleSpec& spec, const GpdParams& p,
                         unsigned workers = 0);

/// `draw` followed by sorting into an EmpiricalDistribution (normalization
/// constant 1), so spec.n must be at least 2.
EmpiricalDistribution sample(const SampleSpec& spec, const GpdParams& p,
                             unsigned workers = 0);

}  // namespace gpd
