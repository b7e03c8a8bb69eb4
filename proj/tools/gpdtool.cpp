// gpdtool: fit, evaluate and sample the Gompertz-Pareto income model.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gpd/commands.hpp"

namespace {

struct RawOptions {
  std::string input;
  std::string format = "raw";
  std::string normalize = "none";
  std::string params;
  std::size_t points = gpd::kDefaultLorenzRows;
  std::size_t n = 0;
  std::uint64_t seed = 42;
  double tol_gini = 0.01;
  double tol_u = 0.5;
  double tol_beta = 0.02;
  std::string output;
  std::string output_format = "json";
  std::vector<double> x;
  std::optional<int> year;
  std::string series;
  bool free_location = false;
  double abs_tol = gpd::QuadratureConfig{}.abs_tol;
  double rel_tol = gpd::QuadratureConfig{}.rel_tol;
};

gpd::RunConfig to_config(const RawOptions& o) {
  gpd::RunConfig cfg;
  if (!o.input.empty()) cfg.input_path = o.input;
  cfg.input_format = gpd::parse_input_format(o.format);
  cfg.normalization = gpd::parse_normalization(o.normalize);
  cfg.quadrature.abs_tol = o.abs_tol;
  cfg.quadrature.rel_tol = o.rel_tol;
  cfg.quadrature.validate();
  cfg.fit.fix_location = !o.free_location;
  if (!o.output.empty()) cfg.output_path = o.output;
  cfg.output_format = gpd::parse_output_format(o.output_format);
  cfg.seed = o.seed;
  if (!o.params.empty()) cfg.params = gpd::parse_params(o.params);
  cfg.points = o.points;
  cfg.sample_size = o.n;
  cfg.eval_x = o.x;
  cfg.year = o.year;
  if (!o.series.empty()) cfg.series_manifest = o.series;
  cfg.tolerances = {o.tol_beta, o.tol_gini, o.tol_u};
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gompertz-Pareto income distribution tool"};
  app.require_subcommand(1);
  RawOptions o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--output", o.output, "Write the report here instead of stdout");
    sub->add_option("--output-format", o.output_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--abs-tol", o.abs_tol, "Quadrature absolute tolerance");
    sub->add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance");
  };
  auto input = [&o](CLI::App* sub) {
    sub->add_option("--input", o.input, "Income file");
    sub->add_option("--format", o.format, "raw (one income per line) or binned (x,F)")
        ->check(CLI::IsMember({"raw", "binned"}));
    sub->add_option("--normalize", o.normalize, "mean, none or const=<v> (raw input only)");
    sub->add_flag("--free-location", o.free_location,
                  "Use the fitted intercept as A instead of ln(ln 100)");
  };

  auto* fit = app.add_subcommand("fit", "Fit the model to an income file");
  input(fit);
  common(fit);
  fit->add_option("--year", o.year, "Year label for the report");

  auto* lorenz = app.add_subcommand("lorenz", "Emit Lorenz curve rows F,F1,transition");
  input(lorenz);
  common(lorenz);
  lorenz->add_option("--params", o.params, "B,XT,ALPHA (otherwise fitted from --input)");
  lorenz->add_option("--points", o.points, "Number of rows");

  auto* series = app.add_subcommand("gini-series", "Gini and u per year");
  common(series);
  series->add_option("--series", o.series, "Manifest of year,path lines (default: built-in reference rows)");
  series->add_option("--normalize", o.normalize, "mean, none or const=<v>");

  auto* table1 = app.add_subcommand("table1", "Check beta, Gini* and u* against the built-in reference rows");
  common(table1);
  table1->add_option("--tol-beta", o.tol_beta, "Relative tolerance on beta");
  table1->add_option("--tol-gini", o.tol_gini, "Absolute tolerance on Gini*");
  table1->add_option("--tol-u", o.tol_u, "Absolute tolerance on u*");

  auto* sample = app.add_subcommand("sample", "Draw incomes from the model");
  sample->add_option("--params", o.params, "B,XT,ALPHA")->required();
  sample->add_option("--n", o.n, "Number of draws")->required();
  sample->add_option("--seed", o.seed, "Random seed");
  sample->add_option("--output", o.output, "Write the sample here instead of stdout");

  auto* eval = app.add_subcommand("eval", "Evaluate F, 1-F, f and F1 at incomes");
  common(eval);
  eval->add_option("--params", o.params, "B,XT,ALPHA")->required();
  eval->add_option("--x", o.x, "Normalized incomes")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << gpd::error_json(gpd::ErrorCode::Usage, e.what()) << '\n';
    return 2;
  }

  gpd::RunConfig cfg;
  try {
    cfg = to_config(o);
  } catch (const gpd::Error& e) {
    std::cerr << gpd::error_json(e.code(), e.what()) << '\n';
    return 2;
  }

  if (*fit) return gpd::cmd_fit(cfg, std::cout, std::cerr);
  if (*lorenz) return gpd::cmd_lorenz(cfg, std::cout, std::cerr);
  if (*series) return gpd::cmd_gini_series(cfg, std::cout, std::cerr);
  if (*table1) return gpd::cmd_table1(cfg, std::cout, std::cerr);
  if (*sample) return gpd::cmd_sample(cfg, std::cout, std::cerr);
  return gpd::cmd_eval(cfg, std::cout, std::cerr);
}
