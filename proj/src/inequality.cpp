#include "gpd/inequality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>

#include "gpd/error.hpp"
#include "gpd/sampling.hpp"

namespace gpd {

namespace {

// Income share above x on the Pareto branch, as a first-moment amount:
// alpha beta / (alpha - 1) * x^(1 - alpha).
double pareto_moment_above(double x, const GpdParams& p) {
  const double alpha = p.tail_exponent();
  return alpha * p.tail_amplitude() / (alpha - 1.0) * std::pow(x, 1.0 - alpha);
}

}  // namespace

double first_moment_distribution(double x, const FirstMomentGrid& grid) {
  const GpdParams& p = grid.params();
  if (std::isnan(x) || x < 0.0) {
    throw Error(ErrorCode::InvalidParameters,
                "normalized income must be non-negative");
  }
  const double mean = grid.mean_income();
  if (x < p.threshold()) return grid.at(x) / mean;
  return 100.0 - pareto_moment_above(x, p) / mean;
}

LorenzCurve lorenz_curve(const FirstMomentGrid& grid, std::size_t n_points) {
  if (n_points < 16) {
    throw Error(ErrorCode::InvalidParameters, "Lorenz curve needs at least 16 points");
  }
  const GpdParams& p = grid.params();
  const double transition_share = cdf(p.threshold(), p);
  const double top_share =
      std::max(99.99, 100.0 * (1.0 - 1.0 / static_cast<double>(n_points)));

  // n_points - 1 rows uniform in the population share, plus the transition.
  const std::size_t uniform = n_points - 1;
  std::vector<double> shares;
  shares.reserve(n_points);
  for (std::size_t k = 0; k < uniform; ++k) {
    shares.push_back(top_share * static_cast<double>(k) /
                     static_cast<double>(uniform - 1));
  }
  const auto insert_at = std::lower_bound(shares.begin(), shares.end(), transition_share);
  const auto transition_index = static_cast<std::size_t>(insert_at - shares.begin());
  shares.insert(insert_at, transition_share);

  LorenzCurve curve;
  curve.points.reserve(shares.size());
  for (std::size_t k = 0; k < shares.size(); ++k) {
    const double x = k == transition_index ? p.threshold()
                                           : inverse_ccdf(100.0 - shares[k], p);
    curve.points.push_back(
        LorenzPoint{x, cdf(x, p), first_moment_distribution(x, grid)});
  }
  curve.transition_index = transition_index;
  return curve;
}

double gini(const FirstMomentGrid& grid) {
  const GpdParams& p = grid.params();
  const double mean = grid.mean_income();
  const double alpha = p.tail_exponent();
  const double beta = p.tail_amplitude();
  const double xt = p.threshold();

  // Integral of I(x) g(x) over the body, one grid interval at a time so the
  // integrand is smooth on every piece.
  const auto nodes = grid.nodes();
  auto integrand = [&](double x) { return grid.at(x) * gompertz_density(x, p); };
  double body = 0.0;
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    body += integrate(integrand, nodes[k - 1], nodes[k], grid.config());
  }

  const double braces = body / mean + 100.0 * beta * std::pow(xt, -alpha) +
                        alpha * alpha * beta * beta * std::pow(xt, 1.0 - 2.0 * alpha) /
                            (mean * (alpha - 1.0) * (1.0 - 2.0 * alpha));
  return 1.0 - 2e-4 * braces;
}

double gini(const GpdParams& p, const QuadratureConfig& cfg) {
  return gini(build_first_moment_grid(p, kDefaultGridNodes, cfg));
}

double gompertz_share(const FirstMomentGrid& grid) {
  const GpdParams& p = grid.params();
  const double alpha = p.tail_exponent();
  const double xt = p.threshold();
  return 100.0 - alpha / (alpha - 1.0) * xt / grid.mean_income() * ccdf(xt, p);
}

double gompertz_share(const GpdParams& p, const QuadratureConfig& cfg) {
  return gompertz_share(build_first_moment_grid(p, kDefaultGridNodes, cfg));
}

namespace {

enum Parameter : std::size_t { kLocation, kRate, kThreshold, kExponent, kAmplitude };

double evaluate_target(const std::array<double, 5>& theta, bool independent_amplitude,
                       InequalityTarget target, const QuadratureConfig& cfg,
                       std::size_t grid_nodes) {
  const GpdParams p =
      independent_amplitude
          ? GpdParams::unconstrained(theta[kLocation], theta[kRate],
                                     theta[kThreshold], theta[kExponent],
                                     theta[kAmplitude])
          : GpdParams::with_location(theta[kLocation], theta[kRate],
                                     theta[kThreshold], theta[kExponent]);
  const auto grid = build_first_moment_grid(p, grid_nodes, cfg);
  return target == InequalityTarget::Gini ? gini(grid) : gompertz_share(grid);
}

}  // namespace

double propagate_uncertainty(const GpdParams& p, const UncertaintyInputs& sigmas,
                             InequalityTarget target, const QuadratureConfig& cfg,
                             std::size_t grid_nodes) {
  const std::array<double, 5> theta{p.location(), p.rate(), p.threshold(),
                                    p.tail_exponent(), p.tail_amplitude()};
  const std::array<double, 5> sigma{
      sigmas.location_relative * std::abs(p.location()), sigmas.rate,
      sigmas.threshold, sigmas.exponent, sigmas.amplitude.value_or(0.0)};
  for (double s : sigma) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw Error(ErrorCode::InvalidParameters,
                  "standard errors must be finite and non-negative");
    }
  }
  const bool independent = sigmas.amplitude.has_value();

  struct Partial {
    std::size_t index;
    std::future<double> plus;
    std::future<double> minus;
    double step;
  };
  std::vector<Partial> partials;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (sigma[i] == 0.0) continue;
    const double step = 1e-4 * std::abs(theta[i]);
    auto shifted = [&, i](double delta) {
      auto t = theta;
      t[i] += delta;
      return std::async(std::launch::async, evaluate_target, t, independent,
                        target, cfg, grid_nodes);
    };
    partials.push_back(Partial{i, shifted(step), shifted(-step), step});
  }

  double variance = 0.0;
  for (auto& d : partials) {
    const double derivative = (d.plus.get() - d.minus.get()) / (2.0 * d.step);
    variance += derivative * derivative * sigma[d.index] * sigma[d.index];
  }
  return std::sqrt(variance);
}

InequalityReport inequality_report(const GpdParams& p,
                                   const UncertaintyInputs& sigmas,
                                   const QuadratureConfig& cfg) {
  const auto grid = build_first_moment_grid(p, kDefaultGridNodes, cfg);
  return InequalityReport{
      .gini = gini(grid),
      .gini_sigma = propagate_uncertainty(p, sigmas, InequalityTarget::Gini, cfg),
      .u = gompertz_share(grid),
      .u_sigma = propagate_uncertainty(p, sigmas, InequalityTarget::GompertzShare, cfg),
      .mean_income = grid.mean_income(),
  };
}

}  // namespace gpd
