#pragma once

#include <span>
#include <vector>

#include "gpd/inequality.hpp"

namespace gpd {

/// Sorted, non-negative normalized incomes together with the divisor that was
/// applied to the raw values.
class EmpiricalDistribution {
 public:
  /// Sorts a private copy. Requires at least two values, all finite and >= 0,
  /// and a positive normalization constant.
  static EmpiricalDistribution make(std::vector<double> values,
                                    double normalization_constant = 1.0);

  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double normalization_constant() const noexcept { return constant_; }

 private:
  EmpiricalDistribution(std::vector<double> values, double constant)
      : values_(std::move(values)), constant_(constant) {}

  std::vector<double> values_;
  double constant_;
};

struct CcdfPoint {
  double x;  // normalized income
  double F;  // percent of individuals with income >= x
};

/// CCDF sampled at increasing incomes: x strictly increasing, F strictly
/// decreasing and within (0, 100].
class BinnedCcdf {
 public:
  /// Throws NonMonotoneInput naming the first offending pair.
  static BinnedCcdf make(std::vector<CcdfPoint> points);

  [[nodiscard]] std::span<const CcdfPoint> points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

 private:
  explicit BinnedCcdf(std::vector<CcdfPoint> points) : points_(std::move(points)) {}

  std::vector<CcdfPoint> points_;
};

enum class NormalizationMode { Mean, Constant, None };

struct Normalization {
  NormalizationMode mode = NormalizationMode::None;
  double constant = 1.0;  // used by NormalizationMode::Constant
};

EmpiricalDistribution normalize(std::vector<double> raw, const Normalization& how);

/// Raw incomes recovered by multiplying back the normalization constant.
std::vector<double> denormalize(const EmpiricalDistribution& dist);

/// F(x_j) = 100 * #{values >= x_j} / n at each distinct x_j.
BinnedCcdf empirical_ccdf(const EmpiricalDistribution& dist);

/// Points (100 k / n, 100 * sum_{j<=k} x_j / sum x) for k = 0..n.
LorenzCurve empirical_lorenz(const EmpiricalDistribution& dist);

/// 1 - 2e-4 * trapezoid area under the empirical Lorenz curve.
double empirical_gini(const EmpiricalDistribution& dist);

/// Percentage of total income held by values strictly below the cutoff.
double empirical_share(const EmpiricalDistribution& dist, double cutoff);

}  // namespace gpd
