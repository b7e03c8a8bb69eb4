#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "gpd/error.hpp"
#include "gpd/fitting.hpp"
#include "gpd/io.hpp"
#include "gpd/quadrature.hpp"
#include "gpd/report.hpp"

namespace gpd {

inline constexpr std::size_t kDefaultLorenzRows = 512;

/// Everything a subcommand may need. Fields a command does not use are ignored.
struct RunConfig {
  std::optional<std::filesystem::path> input_path;
  InputFormat input_format = InputFormat::Raw;
  Normalization normalization{};
  QuadratureConfig quadrature{};
  FitConfig fit{};
  std::optional<std::filesystem::path> output_path;
  OutputFormat output_format = OutputFormat::Json;
  std::uint64_t seed = 42;

  std::optional<GpdParams> params;          // --params B,XT,ALPHA
  std::size_t points = kDefaultLorenzRows;  // Lorenz rows
  std::size_t sample_size = 0;              // draws for `sample`
  std::vector<double> eval_x;               // incomes for `eval`
  std::optional<int> year;                  // label for `fit`
  std::optional<std::filesystem::path> series_manifest;  // year,path lines
  Table1Tolerances tolerances{};
};

/// "B,XT,ALPHA" with the theoretical location.
GpdParams parse_params(std::string_view text);

// Report builders. They throw gpd::Error; the cmd_* wrappers turn that into an
// exit status and a JSON error line.

FitReport fit_report(const RunConfig& cfg);
LorenzReport lorenz_report(const GpdParams& p, std::size_t rows,
                           const QuadratureConfig& q = {});
/// Sigmas treat beta as an independent measurement and add a 2.15% relative
/// error on A; `with_sigmas = false` skips that propagation.
Table1Report table1_report(const Table1Tolerances& tol, const QuadratureConfig& q = {},
                           bool with_sigmas = true);
SeriesReport table1_series(const QuadratureConfig& q = {});
/// One fitted year per manifest line "year,path"; relative paths resolve
/// against the manifest's directory. "Original" values are measured on the
/// sample: empirical Gini and the share of income below the fitted x_t.
SeriesReport manifest_series(const std::filesystem::path& manifest, const RunConfig& cfg);
EvalReport eval_report(const GpdParams& p, const std::vector<double>& xs,
                       const QuadratureConfig& q = {});
/// Raw-format text, one draw per line in generation order.
std::string sample_text(const GpdParams& p, std::size_t n, std::uint64_t seed);

/// {"error":{"code":...,"message":...}}
std::string error_json(ErrorCode code, std::string_view message);

// Exit status: 0 success, 1 a requested check failed, 2 an error (reported as
// JSON on `err`). Output goes to cfg.output_path when set, otherwise `out`.
int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_lorenz(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gini_series(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace gpd
