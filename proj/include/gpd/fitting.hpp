#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gpd/empirical.hpp"
#include "gpd/gpd_core.hpp"

namespace gpd {

/// Largest relative gap between the fitted and theoretical location reported
/// for the Brazilian income tables; larger gaps are flagged in FitResult.
inline constexpr double kObservedLocationDiscrepancy = 0.0215;

struct FitConfig {
  /// Candidate thresholds as population percentiles; the candidate income is
  /// the first CCDF point whose F drops to 100 - q or below.
  std::vector<double> threshold_quantiles = default_threshold_quantiles();
  std::size_t min_tail_points = 10;
  /// When true the fitted parameters use A = ln(ln 100) and the regression
  /// intercept is only a diagnostic; otherwise the intercept becomes A.
  bool fix_location = true;
  /// Rescan every data abscissa between the neighbours of the best quantile
  /// candidate.
  bool refine_threshold = true;
  /// A fitted intercept further than this (relative) from ln(ln 100) means no
  /// Gompertz body starting at F(0) = 100 was found, and the fit fails.
  double max_location_discrepancy = 0.05;

  /// 90.0, 90.1, ..., 99.9.
  static std::vector<double> default_threshold_quantiles();

  void validate() const;
};

struct RegressionSample {
  std::vector<double> x;
  std::vector<double> y;
  std::size_t excluded = 0;  // points dropped for lying outside the log domain
};

/// (x, ln ln F) for points with F > 1. Slope is -B and intercept A.
RegressionSample linearize_gompertz(std::span<const CcdfPoint> points);

/// (ln x, ln F) for tail points. Slope is -alpha and intercept ln beta.
RegressionSample linearize_pareto(std::span<const CcdfPoint> points,
                                  std::size_t min_points);

struct OlsResult {
  double slope;
  double intercept;
  double slope_sigma;
  double intercept_sigma;
  double r2;
  std::size_t n;
};

/// Closed-form ordinary least squares with residual-based standard errors.
/// Needs at least 3 pairs and non-constant abscissae.
OlsResult ordinary_least_squares(std::span<const double> x, std::span<const double> y);

struct FitResult {
  GpdParams params;
  double rate_sigma;
  double exponent_sigma;
  double amplitude_sigma;  // rate and exponent errors pushed through the constraint
  double location_fitted;
  double location_discrepancy;  // |A_fitted - ln ln 100| / ln ln 100
  bool location_flagged;        // discrepancy above kObservedLocationDiscrepancy
  double r2_gompertz;
  double r2_pareto;
  double chosen_threshold;
  std::size_t gompertz_points;
  std::size_t pareto_points;
};

/// Double-log regression of the body and log-log regression of the tail,
/// scanning thresholds for the smallest (1 - r2_gompertz) + (1 - r2_pareto).
FitResult fit(const BinnedCcdf& ccdf, const FitConfig& cfg = {});
FitResult fit(const EmpiricalDistribution& dist, const FitConfig& cfg = {});

}  // namespace gpd
