#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gpd/error.hpp"
#include "gpd/gpd_core.hpp"

namespace gpd {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  unsigned max_depth = 60;

  /// Throws InvalidParameters unless both tolerances are positive and
  /// max_depth >= 10.
  void validate() const;
};

namespace detail {

struct Segment {
  double lower;
  double upper;
  double value;
  double error;
  unsigned depth;
};

// One 15-point Kronrod evaluation with the embedded 7-point Gauss rule as the
// error estimate, both scaled to [lower, upper].
template <class F>
Segment kronrod15(F& f, double lower, double upper, unsigned depth) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& nodes = Kronrod::abscissa();
  const auto& kw = Kronrod::weights();
  const auto& gw = Gauss::weights();

  const double mid = 0.5 * (lower + upper);
  const double half = 0.5 * (upper - lower);
  const double centre = f(mid);
  double kronrod = centre * kw[0];
  double gauss = centre * gw[0];
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double pair = f(mid + half * nodes[i]) + f(mid - half * nodes[i]);
    kronrod += pair * kw[i];
    if (i % 2 == 0) gauss += pair * gw[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    throw Error(ErrorCode::QuadratureFailure,
                "integrand is not finite on [" + std::to_string(lower) + ", " +
                    std::to_string(upper) + "]");
  }
  const double roundoff = 50.0 * 2.220446049250313e-16 * std::abs(kronrod);
  return Segment{lower, upper, kronrod,
                 std::max(std::abs(kronrod - gauss), roundoff), depth};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b]. Bisects the
/// segment with the largest error estimate until the summed estimate drops
/// below max(abs_tol, rel_tol * |result|). Throws QuadratureFailure if a
/// segment would have to be split beyond max_depth.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (!(std::isfinite(a) && std::isfinite(b) && a <= b)) {
    throw Error(ErrorCode::InvalidParameters,
                "integration bounds must be finite with a <= b");
  }
  if (a == b) return 0.0;

  auto worse = [](const detail::Segment& l, const detail::Segment& r) {
    return l.error < r.error;
  };
  std::vector<detail::Segment> heap{detail::kronrod15(f, a, b, 0)};
  double value = heap.front().value;
  double error = heap.front().error;

  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
    std::pop_heap(heap.begin(), heap.end(), worse);
    const detail::Segment worst = heap.back();
    heap.pop_back();
    if (worst.depth >= cfg.max_depth) {
      throw Error(ErrorCode::QuadratureFailure,
                  "no convergence at maximum subdivision depth near x = " +
                      std::to_string(0.5 * (worst.lower + worst.upper)));
    }
    const double mid = 0.5 * (worst.lower + worst.upper);
    for (auto piece : {detail::kronrod15(f, worst.lower, mid, worst.depth + 1),
                       detail::kronrod15(f, mid, worst.upper, worst.depth + 1)}) {
      heap.push_back(piece);
      std::push_heap(heap.begin(), heap.end(), worse);
    }
    value = 0.0;
    error = 0.0;
    for (const auto& s : heap) {
      value += s.value;
      error += s.error;
    }
  }
  return value;
}

/// I(x): integral of w g(w) over [0, x] on the Gompertz branch, 0 <= x <= x_t.
double first_moment_integral(double x, const GpdParams& p,
                             const QuadratureConfig& cfg = {});

/// Closed-form Pareto contribution to the first moment:
/// alpha beta / (alpha - 1) * x_t^(1 - alpha).
double pareto_first_moment(const GpdParams& p);

/// <x> = (I(x_t) + pareto_first_moment) / 100.
double mean_income(const GpdParams& p, const QuadratureConfig& cfg = {});

/// Cumulative table of I(x) over [0, x_t]. Lookups between nodes add one short
/// adaptive integral to the tabulated value, so the result is monotone in x and
/// carries the quadrature tolerance regardless of node count.
class FirstMomentGrid {
 public:
  [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] const GpdParams& params() const noexcept { return params_; }
  [[nodiscard]] const QuadratureConfig& config() const noexcept { return cfg_; }

  /// I(x) for 0 <= x <= x_t.
  [[nodiscard]] double at(double x) const;
  /// I(x_t).
  [[nodiscard]] double total() const noexcept { return values_.back(); }
  /// Mean normalized income implied by the tabulated I(x_t).
  [[nodiscard]] double mean_income() const noexcept;

 private:
  friend FirstMomentGrid build_first_moment_grid(const GpdParams&, std::size_t,
                                                 const QuadratureConfig&);
  FirstMomentGrid(GpdParams params, QuadratureConfig cfg)
      : params_(params), cfg_(cfg) {}

  GpdParams params_;
  QuadratureConfig cfg_;
  std::vector<double> nodes_;
  std::vector<double> values_;
};

inline constexpr std::size_t kDefaultGridNodes = 257;

/// Uniform nodes over [0, x_t]; n_nodes >= 64.
FirstMomentGrid build_first_moment_grid(const GpdParams& p,
                                        std::size_t n_nodes = kDefaultGridNodes,
                                        const QuadratureConfig& cfg = {});

}  // namespace gpd
