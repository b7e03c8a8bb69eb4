#include "gpd/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "gpd/error.hpp"

namespace gpd {

std::vector<double> FitConfig::default_threshold_quantiles() {
  std::vector<double> q;
  for (int tenths = 900; tenths <= 999; ++tenths) q.push_back(tenths / 10.0);
  return q;
}

void FitConfig::validate() const {
  if (threshold_quantiles.empty()) {
    throw Error(ErrorCode::InvalidParameters, "threshold candidate grid is empty");
  }
  for (std::size_t i = 0; i < threshold_quantiles.size(); ++i) {
    const double q = threshold_quantiles[i];
    if (!(q > 0.0 && q < 100.0) || (i > 0 && !(threshold_quantiles[i - 1] < q))) {
      throw Error(ErrorCode::InvalidParameters,
                  "threshold quantiles must be increasing and inside (0, 100)");
    }
  }
  if (min_tail_points < 3) {
    throw Error(ErrorCode::InvalidParameters, "min_tail_points must be at least 3");
  }
  if (!(max_location_discrepancy > 0.0)) {
    throw Error(ErrorCode::InvalidParameters,
                "max_location_discrepancy must be positive");
  }
}

RegressionSample linearize_gompertz(std::span<const CcdfPoint> points) {
  RegressionSample out;
  for (const auto& pt : points) {
    if (pt.F > 1.0) {
      out.x.push_back(pt.x);
      out.y.push_back(std::log(std::log(pt.F)));
    } else {
      ++out.excluded;
    }
  }
  if (out.x.size() < 3) {
    throw Error(ErrorCode::InsufficientData,
                "Gompertz regression needs at least 3 points with F > 1, got " +
                    std::to_string(out.x.size()));
  }
  return out;
}

RegressionSample linearize_pareto(std::span<const CcdfPoint> points,
                                  std::size_t min_points) {
  RegressionSample out;
  for (const auto& pt : points) {
    if (pt.x > 0.0 && pt.F > 0.0) {
      out.x.push_back(std::log(pt.x));
      out.y.push_back(std::log(pt.F));
    } else {
      ++out.excluded;
    }
  }
  if (out.x.size() < min_points) {
    throw Error(ErrorCode::InsufficientData,
                "Pareto regression needs at least " + std::to_string(min_points) +
                    " tail points, got " + std::to_string(out.x.size()));
  }
  return out;
}

OlsResult ordinary_least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::InvalidParameters, "regression abscissae and ordinates differ in length");
  }
  const std::size_t n = x.size();
  if (n < 3) {
    throw Error(ErrorCode::InsufficientData, "least squares needs at least 3 pairs");
  }
  long double mx = 0.0L, my = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<long double>(n);
  my /= static_cast<long double>(n);
  long double sxx = 0.0L, sxy = 0.0L, syy = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double dx = x[i] - mx;
    const long double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0L)) {
    throw Error(ErrorCode::InvalidParameters, "least squares abscissae are all equal");
  }
  const long double slope = sxy / sxx;
  const long double intercept = my - slope * mx;
  long double sse = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double r = y[i] - (intercept + slope * x[i]);
    sse += r * r;
  }
  const long double s2 = sse / static_cast<long double>(n - 2);
  const long double r2 = syy > 0.0L ? 1.0L - sse / syy : 1.0L;
  return OlsResult{
      .slope = static_cast<double>(slope),
      .intercept = static_cast<double>(intercept),
      .slope_sigma = static_cast<double>(std::sqrt(s2 / sxx)),
      .intercept_sigma = static_cast<double>(
          std::sqrt(s2 * (1.0L / static_cast<long double>(n) + mx * mx / sxx))),
      .r2 = static_cast<double>(std::clamp(r2, 0.0L, 1.0L)),
      .n = n,
  };
}

namespace {

// Running sums for a regression over a contiguous index range, on data shifted
// by a fixed origin to limit cancellation in the centred moments.
struct Sums {
  long double n = 0, x = 0, y = 0, xx = 0, xy = 0, yy = 0;

  void add(long double dx, long double dy) {
    n += 1;
    x += dx;
    y += dy;
    xx += dx * dx;
    xy += dx * dy;
    yy += dy * dy;
  }

  // 1 - r^2, or nullopt when the abscissae are degenerate.
  [[nodiscard]] std::optional<long double> unexplained() const {
    const long double sxx = xx - x * x / n;
    const long double sxy = xy - x * y / n;
    const long double syy = yy - y * y / n;
    if (!(sxx > 0.0L)) return std::nullopt;
    if (!(syy > 0.0L)) return 0.0L;
    return std::max(0.0L, (syy - sxy * sxy / sxx) / syy);
  }
};

class ThresholdScan {
 public:
  ThresholdScan(std::span<const CcdfPoint> points, std::size_t min_tail)
      : points_(points), min_tail_(min_tail) {
    // Points with F <= 1 sit at the top of the sample; everything before the
    // first of them is usable by the Gompertz regression.
    gompertz_end_ = static_cast<std::size_t>(
        std::find_if(points.begin(), points.end(), [](const CcdfPoint& p) { return p.F <= 1.0; }) -
        points.begin());
    const double gx0 = points.front().x;
    const double gy0 = gompertz_end_ > 0 ? std::log(std::log(points.front().F)) : 0.0;
    gompertz_.resize(gompertz_end_ + 1);
    for (std::size_t i = 0; i < gompertz_end_; ++i) {
      gompertz_[i + 1] = gompertz_[i];
      gompertz_[i + 1].add(points[i].x - gx0, std::log(std::log(points[i].F)) - gy0);
    }
    const double px0 = std::log(points.back().x);
    const double py0 = std::log(points.back().F);
    pareto_.resize(points.size() + 1);
    for (std::size_t i = points.size(); i-- > 0;) {
      pareto_[i] = pareto_[i + 1];
      if (points[i].x > 0.0) {
        pareto_[i].add(std::log(points[i].x) - px0, std::log(points[i].F) - py0);
      }
    }
  }

  // Objective when the tail starts at point k, nullopt if either side cannot
  // be regressed.
  [[nodiscard]] std::optional<long double> objective(std::size_t k) const {
    if (k == 0 || k >= points_.size() || !(points_[k].x > 0.0)) return std::nullopt;
    const std::size_t body_end = std::min(k, gompertz_end_);
    if (body_end < 3 || points_.size() - k < min_tail_) return std::nullopt;
    const auto body = gompertz_[body_end].unexplained();
    const auto tail = pareto_[k].unexplained();
    if (!body || !tail) return std::nullopt;
    return *body + *tail;
  }

 private:
  std::span<const CcdfPoint> points_;
  std::size_t min_tail_;
  std::size_t gompertz_end_ = 0;
  std::vector<Sums> gompertz_;  // prefix sums over [0, i)
  std::vector<Sums> pareto_;    // suffix sums over [i, end)
};

struct Best {
  std::size_t index = 0;
  long double objective = std::numeric_limits<long double>::infinity();
  bool found = false;

  void offer(std::size_t k, std::optional<long double> value) {
    if (value && *value < objective) {
      index = k;
      objective = *value;
      found = true;
    }
  }
};

std::size_t select_threshold(std::span<const CcdfPoint> points, const FitConfig& cfg) {
  const ThresholdScan scan(points, cfg.min_tail_points);

  std::vector<std::size_t> candidates;
  for (double q : cfg.threshold_quantiles) {
    const auto it = std::find_if(points.begin(), points.end(),
                                 [q](const CcdfPoint& p) { return p.F <= 100.0 - q; });
    if (it == points.end()) continue;
    const auto k = static_cast<std::size_t>(it - points.begin());
    if (candidates.empty() || candidates.back() != k) candidates.push_back(k);
  }

  Best coarse;
  std::size_t coarse_slot = 0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto value = scan.objective(candidates[c]);
    if (value && *value < coarse.objective) coarse_slot = c;
    coarse.offer(candidates[c], value);
  }
  if (!coarse.found) {
    throw Error(ErrorCode::FitFailure,
                "no candidate threshold leaves enough points for both regressions");
  }
  if (!cfg.refine_threshold) return coarse.index;

  const std::size_t lo = candidates[coarse_slot == 0 ? 0 : coarse_slot - 1];
  const std::size_t hi =
      candidates[std::min(coarse_slot + 1, candidates.size() - 1)];
  Best fine;
  for (std::size_t k = lo; k <= hi; ++k) fine.offer(k, scan.objective(k));
  return fine.index;
}

}  // namespace

FitResult fit(const BinnedCcdf& ccdf, const FitConfig& cfg) {
  cfg.validate();
  const auto points = ccdf.points();
  const std::size_t k = select_threshold(points, cfg);

  const auto body = linearize_gompertz(points.first(k));
  const auto tail = linearize_pareto(points.subspan(k), cfg.min_tail_points);
  const OlsResult g = ordinary_least_squares(body.x, body.y);
  const OlsResult t = ordinary_least_squares(tail.x, tail.y);

  const double rate = -g.slope;
  const double exponent = -t.slope;
  const double threshold = points[k].x;
  if (!(rate > 0.0)) {
    throw Error(ErrorCode::FitFailure,
                "Gompertz regression gave a non-positive rate B = " + std::to_string(rate));
  }
  if (!(exponent > 1.0)) {
    throw Error(ErrorCode::Divergence,
                "fitted Pareto exponent " + std::to_string(exponent) +
                    " does not exceed 1; the mean income would diverge");
  }
  const double theory = theoretical_location();
  const double discrepancy = std::abs(g.intercept - theory) / theory;
  if (discrepancy > cfg.max_location_discrepancy) {
    throw Error(ErrorCode::FitFailure,
                "no Gompertz body found: fitted intercept " + std::to_string(g.intercept) +
                    " is " + std::to_string(100.0 * discrepancy) +
                    "% away from ln(ln 100), so the data do not start at F(0) = 100");
  }
  const double location = cfg.fix_location ? theory : g.intercept;
  const GpdParams params = GpdParams::with_location(location, rate, threshold, exponent);

  auto amplitude = [&](double b, double a) {
    return tail_amplitude_from_constraint(b, threshold, a, location);
  };
  const double hb = 1e-4 * rate;
  const double ha = 1e-4 * exponent;
  const double d_rate = (amplitude(rate + hb, exponent) - amplitude(rate - hb, exponent)) / (2 * hb);
  const double d_exp = (amplitude(rate, exponent + ha) - amplitude(rate, exponent - ha)) / (2 * ha);

  return FitResult{
      .params = params,
      .rate_sigma = g.slope_sigma,
      .exponent_sigma = t.slope_sigma,
      .amplitude_sigma = std::hypot(d_rate * g.slope_sigma, d_exp * t.slope_sigma),
      .location_fitted = g.intercept,
      .location_discrepancy = discrepancy,
      .location_flagged = discrepancy > kObservedLocationDiscrepancy,
      .r2_gompertz = g.r2,
      .r2_pareto = t.r2,
      .chosen_threshold = threshold,
      .gompertz_points = g.n,
      .pareto_points = t.n,
  };
}

FitResult fit(const EmpiricalDistribution& dist, const FitConfig& cfg) {
  return fit(empirical_ccdf(dist), cfg);
}

}  // namespace gpd
