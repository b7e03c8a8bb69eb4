#include "gpd/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace gpd {

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw Error(ErrorCode::InvalidParameters,
                "quadrature tolerances must be strictly positive");
  }
  if (max_depth < 10) {
    throw Error(ErrorCode::InvalidParameters, "quadrature max_depth must be >= 10");
  }
}

namespace {

auto first_moment_integrand(const GpdParams& p) {
  return [&p](double w) { return w * gompertz_density(w, p); };
}

}  // namespace

double first_moment_integral(double x, const GpdParams& p,
                             const QuadratureConfig& cfg) {
  if (!(x >= 0.0 && x <= p.threshold())) {
    throw Error(ErrorCode::InvalidParameters,
                "first moment integral is defined on [0, x_t], got x = " +
                    std::to_string(x));
  }
  return integrate(first_moment_integrand(p), 0.0, x, cfg);
}

double pareto_first_moment(const GpdParams& p) {
  const double alpha = p.tail_exponent();
  return alpha * p.tail_amplitude() / (alpha - 1.0) *
         std::pow(p.threshold(), 1.0 - alpha);
}

double mean_income(const GpdParams& p, const QuadratureConfig& cfg) {
  return (first_moment_integral(p.threshold(), p, cfg) + pareto_first_moment(p)) /
         100.0;
}

double FirstMomentGrid::at(double x) const {
  if (!(x >= 0.0 && x <= params_.threshold())) {
    throw Error(ErrorCode::InvalidParameters,
                "first moment grid covers [0, x_t], got x = " + std::to_string(x));
  }
  const auto upper = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const auto k = static_cast<std::size_t>(upper - nodes_.begin()) - 1;
  if (nodes_[k] == x) return values_[k];
  return values_[k] +
         integrate(first_moment_integrand(params_), nodes_[k], x, cfg_);
}

double FirstMomentGrid::mean_income() const noexcept {
  return (total() + pareto_first_moment(params_)) / 100.0;
}

FirstMomentGrid build_first_moment_grid(const GpdParams& p, std::size_t n_nodes,
                                        const QuadratureConfig& cfg) {
  cfg.validate();
  if (n_nodes < 64) {
    throw Error(ErrorCode::InvalidParameters,
                "first moment grid needs at least 64 nodes");
  }
  FirstMomentGrid grid(p, cfg);
  grid.nodes_.resize(n_nodes);
  grid.values_.resize(n_nodes);
  const double xt = p.threshold();
  const double step = xt / static_cast<double>(n_nodes - 1);
  for (std::size_t k = 0; k < n_nodes; ++k) {
    grid.nodes_[k] = static_cast<double>(k) * step;
  }
  grid.nodes_.back() = xt;

  // Summing per-interval integrals of a positive integrand keeps the table
  // non-decreasing.
  grid.values_[0] = 0.0;
  const auto integrand = first_moment_integrand(grid.params_);
  for (std::size_t k = 1; k < n_nodes; ++k) {
    grid.values_[k] = grid.values_[k - 1] +
                      integrate(integrand, grid.nodes_[k - 1], grid.nodes_[k], cfg);
  }
  return grid;
}

}  // namespace gpd
