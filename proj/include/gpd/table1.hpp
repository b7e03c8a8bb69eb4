#pragma once

#include <span>

namespace gpd {

/// One year of reference Gompertz-Pareto parameters for Brazil's personal
/// income (PNAD surveys, 1981-2007). `*_original` values were measured from
/// microdata without the model; `*_star` values were computed from the model.
struct Table1Row {
  int year;
  double B;
  double B_sigma;
  double x_t;
  double alpha;
  double alpha_sigma;
  double beta;
  double beta_sigma;
  double gini_original;
  double u_original;
  double gini_star;
  double gini_star_sigma;
  double u_star;
  double u_star_sigma;
};

/// The 24 reference rows in year order (no surveys in 1991, 1994 and 2000).
std::span<const Table1Row> table1_rows() noexcept;

}  // namespace gpd
