#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gpd {

enum class OutputFormat { Json, Csv };

OutputFormat parse_output_format(std::string_view text);

struct FitReport {
  std::optional<int> year;
  double B;
  double B_sigma;
  double x_t;
  double alpha;
  double alpha_sigma;
  double beta;
  double beta_sigma;
  double A_fitted;
  double A_discrepancy;
  double r2_gompertz;
  double r2_pareto;
  double gini;
  double gini_sigma;
  double u;
  double u_sigma;
  double mean_income;

  friend bool operator==(const FitReport&, const FitReport&) = default;
};

struct LorenzRow {
  double F;
  double F1;
  bool transition;

  friend bool operator==(const LorenzRow&, const LorenzRow&) = default;
};

struct LorenzReport {
  std::vector<LorenzRow> rows;

  friend bool operator==(const LorenzReport&, const LorenzReport&) = default;
};

struct Table1Tolerances {
  double beta_relative = 0.02;
  double gini = 0.01;
  double u = 0.5;

  friend bool operator==(const Table1Tolerances&, const Table1Tolerances&) = default;
};

struct Table1Check {
  int year;
  double beta_table;
  double beta_model;
  double beta_relative_delta;
  double gini_table;
  double gini_model;
  double gini_delta;
  double gini_sigma;
  double u_table;
  double u_model;
  double u_delta;
  double u_sigma;
  bool pass;

  friend bool operator==(const Table1Check&, const Table1Check&) = default;
};

struct Table1Report {
  Table1Tolerances tolerances;
  std::vector<Table1Check> rows;

  [[nodiscard]] bool pass() const;

  friend bool operator==(const Table1Report&, const Table1Report&) = default;
};

struct SeriesRow {
  int year;
  double gini_original;
  double gini_star;
  double u_original;
  double u_star;

  friend bool operator==(const SeriesRow&, const SeriesRow&) = default;
};

struct SeriesSummary {
  double max_gini_discrepancy;
  int max_gini_year;
  double max_u_relative_discrepancy;  // |u* - u| / u
  int max_u_year;
};

struct SeriesReport {
  std::vector<SeriesRow> rows;

  /// Throws on an empty series.
  [[nodiscard]] SeriesSummary summary() const;

  friend bool operator==(const SeriesReport&, const SeriesReport&) = default;
};

struct EvalRow {
  double x;
  double ccdf;
  double cdf;
  double density;
  double F1;

  friend bool operator==(const EvalRow&, const EvalRow&) = default;
};

struct EvalReport {
  std::vector<EvalRow> rows;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Writers emit either a JSON document or a header line plus rows; readers
// accept exactly what the writers produce and throw MalformedInput otherwise.
std::string write_report(const FitReport& r, OutputFormat format);
std::string write_report(const LorenzReport& r, OutputFormat format);
std::string write_report(const Table1Report& r, OutputFormat format);
std::string write_report(const SeriesReport& r, OutputFormat format);
std::string write_report(const EvalReport& r, OutputFormat format);

FitReport read_fit_report(const std::string& text, OutputFormat format);
LorenzReport read_lorenz_report(const std::string& text, OutputFormat format);
Table1Report read_table1_report(const std::string& text, OutputFormat format);
SeriesReport read_series_report(const std::string& text, OutputFormat format);
EvalReport read_eval_report(const std::string& text, OutputFormat format);

}  // namespace gpd
