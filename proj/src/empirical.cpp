#include "gpd/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gpd/error.hpp"

namespace gpd {

EmpiricalDistribution EmpiricalDistribution::make(std::vector<double> values,
                                                  double normalization_constant) {
  if (values.empty()) {
    throw Error(ErrorCode::EmptyInput, "income sample is empty");
  }
  if (values.size() < 2) {
    throw Error(ErrorCode::InsufficientData, "income sample needs at least 2 values");
  }
  if (!(std::isfinite(normalization_constant) && normalization_constant > 0.0)) {
    throw Error(ErrorCode::InvalidParameters,
                "normalization constant must be positive and finite");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(std::isfinite(values[i]) && values[i] >= 0.0)) {
      throw Error(ErrorCode::InvalidParameters,
                  "income #" + std::to_string(i + 1) +
                      " is negative or not finite: " + std::to_string(values[i]));
    }
  }
  std::sort(values.begin(), values.end());
  return EmpiricalDistribution(std::move(values), normalization_constant);
}

BinnedCcdf BinnedCcdf::make(std::vector<CcdfPoint> points) {
  if (points.empty()) {
    throw Error(ErrorCode::EmptyInput, "binned CCDF has no points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    if (!std::isfinite(pt.x) || pt.x < 0.0) {
      throw Error(ErrorCode::MalformedInput,
                  "CCDF point " + std::to_string(i + 1) + " has invalid income " +
                      std::to_string(pt.x));
    }
    if (!(pt.F > 0.0 && pt.F <= 100.0)) {
      throw Error(ErrorCode::MalformedInput,
                  "CCDF point " + std::to_string(i + 1) + " has F = " +
                      std::to_string(pt.F) + " outside (0, 100]");
    }
    if (i > 0 && !(points[i - 1].x < pt.x && points[i - 1].F > pt.F)) {
      throw Error(ErrorCode::NonMonotoneInput,
                  "CCDF points " + std::to_string(i) + " and " + std::to_string(i + 1) +
                      " break monotonicity: (" + std::to_string(points[i - 1].x) + ", " +
                      std::to_string(points[i - 1].F) + ") then (" +
                      std::to_string(pt.x) + ", " + std::to_string(pt.F) + ")");
    }
  }
  return BinnedCcdf(std::move(points));
}

EmpiricalDistribution normalize(std::vector<double> raw, const Normalization& how) {
  double constant = 1.0;
  switch (how.mode) {
    case NormalizationMode::None:
      break;
    case NormalizationMode::Constant:
      constant = how.constant;
      if (!(std::isfinite(constant) && constant > 0.0)) {
        throw Error(ErrorCode::InvalidParameters,
                    "normalization constant must be positive");
      }
      break;
    case NormalizationMode::Mean: {
      if (raw.empty()) throw Error(ErrorCode::EmptyInput, "income sample is empty");
      const long double sum = std::accumulate(raw.begin(), raw.end(), 0.0L);
      constant = static_cast<double>(sum / static_cast<long double>(raw.size()));
      if (!(constant > 0.0)) {
        throw Error(ErrorCode::InvalidParameters,
                    "cannot normalize by the mean of an all-zero sample");
      }
      break;
    }
  }
  if (!raw.empty() && std::all_of(raw.begin(), raw.end(), [](double x) { return x == 0.0; })) {
    throw Error(ErrorCode::InvalidParameters, "income sample is all zero");
  }
  if (constant != 1.0) {
    for (double& x : raw) x /= constant;
  }
  return EmpiricalDistribution::make(std::move(raw), constant);
}

std::vector<double> denormalize(const EmpiricalDistribution& dist) {
  std::vector<double> raw(dist.values().begin(), dist.values().end());
  for (double& x : raw) x *= dist.normalization_constant();
  return raw;
}

BinnedCcdf empirical_ccdf(const EmpiricalDistribution& dist) {
  const auto values = dist.values();
  const double n = static_cast<double>(values.size());
  std::vector<CcdfPoint> points;
  for (std::size_t i = 0; i < values.size();) {
    // i is the first index of a run of ties, so n - i values are >= values[i].
    points.push_back(CcdfPoint{values[i], 100.0 * (n - static_cast<double>(i)) / n});
    const double x = values[i];
    while (i < values.size() && values[i] == x) ++i;
  }
  return BinnedCcdf::make(std::move(points));
}

namespace {

long double total_income(std::span<const double> values) {
  const long double total = std::accumulate(values.begin(), values.end(), 0.0L);
  if (!(total > 0.0L)) {
    throw Error(ErrorCode::InvalidParameters, "total income of the sample is zero");
  }
  return total;
}

}  // namespace

LorenzCurve empirical_lorenz(const EmpiricalDistribution& dist) {
  const auto values = dist.values();
  const long double total = total_income(values);
  const double n = static_cast<double>(values.size());

  LorenzCurve curve;
  curve.points.reserve(values.size() + 1);
  curve.points.push_back(LorenzPoint{0.0, 0.0, 0.0});
  long double running = 0.0L;
  for (std::size_t k = 0; k < values.size(); ++k) {
    running += values[k];
    curve.points.push_back(LorenzPoint{values[k],
                                       100.0 * static_cast<double>(k + 1) / n,
                                       static_cast<double>(100.0L * running / total)});
  }
  return curve;
}

double empirical_gini(const EmpiricalDistribution& dist) {
  const auto curve = empirical_lorenz(dist);
  long double area = 0.0L;
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    const auto& a = curve.points[k - 1];
    const auto& b = curve.points[k];
    area += 0.5L * (static_cast<long double>(b.population_share) - a.population_share) *
            (static_cast<long double>(a.income_share) + b.income_share);
  }
  return static_cast<double>(1.0L - 2e-4L * area);
}

double empirical_share(const EmpiricalDistribution& dist, double cutoff) {
  if (!(cutoff > 0.0)) {
    throw Error(ErrorCode::InvalidParameters, "income cutoff must be positive");
  }
  const auto values = dist.values();
  const long double total = total_income(values);
  const auto end = std::lower_bound(values.begin(), values.end(), cutoff);
  const long double below = std::accumulate(values.begin(), end, 0.0L);
  return static_cast<double>(100.0L * below / total);
}

}  // namespace gpd
