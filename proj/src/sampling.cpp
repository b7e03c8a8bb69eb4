#include "gpd/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "gpd/error.hpp"

namespace gpd {

double inverse_ccdf(double v, const GpdParams& p) {
  if (!(v > 0.0 && v <= 100.0)) {
    throw Error(ErrorCode::InvalidParameters,
                "CCDF level must lie in (0, 100], got " + std::to_string(v));
  }
  if (v <= pareto_ccdf(p.threshold(), p)) {
    return std::pow(p.tail_amplitude() / v, 1.0 / p.tail_exponent());
  }
  // Above F(x_t) the Gompertz branch is in force and v > 1 there, so the
  // double logarithm is defined.
  return std::max(0.0, (p.location() - std::log(std::log(v))) / p.rate());
}

namespace {

constexpr std::size_t kBlockSize = std::size_t{1} << 16;

void fill_block(std::span<double> out, std::uint64_t seed, std::uint64_t block,
                const GpdParams& p) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block),
                    static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 engine(seq);
  for (double& x : out) {
    // 53 random bits -> u in [0, 1), so v = 100 (1 - u) lies in (0, 100].
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    x = inverse_ccdf(100.0 * (1.0 - u), p);
  }
}

}  // namespace

std::vector<double> draw(const SampleSpec& spec, const GpdParams& p,
                         unsigned workers) {
  if (spec.n < 1) {
    throw Error(ErrorCode::InvalidParameters, "sample size must be at least 1");
  }
  std::vector<double> values(spec.n);
  const std::size_t blocks = (spec.n + kBlockSize - 1) / kBlockSize;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, blocks));

  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) {
      const std::size_t begin = b * kBlockSize;
      const std::size_t count = std::min(kBlockSize, spec.n - begin);
      fill_block(std::span<double>(values).subspan(begin, count), spec.seed, b, p);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  return values;
}

EmpiricalDistribution sample(const SampleSpec& spec, const GpdParams& p,
                             unsigned workers) {
  return EmpiricalDistribution::make(draw(spec, p, workers), 1.0);
}

}  // namespace gpd
