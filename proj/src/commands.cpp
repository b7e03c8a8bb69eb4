#include "gpd/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gpd/empirical.hpp"
#include "gpd/inequality.hpp"
#include "gpd/sampling.hpp"
#include "gpd/table1.hpp"

namespace gpd {

namespace {

const GpdParams& require_params(const RunConfig& cfg, const char* command) {
  if (!cfg.params) {
    throw Error(ErrorCode::Usage, std::string(command) + " needs --params B,XT,ALPHA");
  }
  return *cfg.params;
}

const std::filesystem::path& require_input(const RunConfig& cfg, const char* command) {
  if (!cfg.input_path) throw Error(ErrorCode::Usage, std::string(command) + " needs --input");
  return *cfg.input_path;
}

FitResult fit_dataset(const Dataset& data, const FitConfig& fc) {
  return std::visit([&](const auto& d) { return fit(d, fc); }, data);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.output_path) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::Io, "cannot write '" + cfg.output_path->string() + "'");
  }
  file << text;
  file.close();
  if (!file) throw Error(ErrorCode::Io, "failed writing '" + cfg.output_path->string() + "'");
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << error_json(e.code(), e.what()) << '\n';
  } catch (const std::bad_alloc&) {
    err << error_json(ErrorCode::Io, "out of memory") << '\n';
  }
  return 2;
}

}  // namespace

GpdParams parse_params(std::string_view text) {
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    v.push_back(parse_number(text.substr(start, comma - start), "--params"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 3) {
    throw Error(ErrorCode::Usage, "--params expects B,XT,ALPHA");
  }
  return GpdParams::from_shape(v[0], v[1], v[2]);
}

std::string error_json(ErrorCode code, std::string_view message) {
  const nlohmann::json j{
      {"error", {{"code", error_code_name(code)}, {"message", std::string(message)}}}};
  return j.dump();
}

FitReport fit_report(const RunConfig& cfg) {
  const auto data = ingest(require_input(cfg, "fit"), cfg.input_format, cfg.normalization);
  const FitResult f = fit_dataset(data, cfg.fit);
  const UncertaintyInputs sigmas{
      .rate = f.rate_sigma,
      .threshold = 0.0,
      .exponent = f.exponent_sigma,
      .location_relative = f.location_discrepancy,
      .amplitude = std::nullopt,
  };
  const InequalityReport ineq = inequality_report(f.params, sigmas, cfg.quadrature);
  return FitReport{
      .year = cfg.year,
      .B = f.params.rate(),
      .B_sigma = f.rate_sigma,
      .x_t = f.params.threshold(),
      .alpha = f.params.tail_exponent(),
      .alpha_sigma = f.exponent_sigma,
      .beta = f.params.tail_amplitude(),
      .beta_sigma = f.amplitude_sigma,
      .A_fitted = f.location_fitted,
      .A_discrepancy = f.location_discrepancy,
      .r2_gompertz = f.r2_gompertz,
      .r2_pareto = f.r2_pareto,
      .gini = ineq.gini,
      .gini_sigma = ineq.gini_sigma,
      .u = ineq.u,
      .u_sigma = ineq.u_sigma,
      .mean_income = ineq.mean_income,
  };
}

LorenzReport lorenz_report(const GpdParams& p, std::size_t rows, const QuadratureConfig& q) {
  const auto curve = lorenz_curve(build_first_moment_grid(p, kDefaultGridNodes, q), rows);
  LorenzReport r;
  r.rows.reserve(curve.points.size());
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    r.rows.push_back({curve.points[k].population_share, curve.points[k].income_share,
                      curve.transition_index == k});
  }
  return r;
}

Table1Report table1_report(const Table1Tolerances& tol, const QuadratureConfig& q,
                           bool with_sigmas) {
  const auto rows = table1_rows();
  std::vector<std::future<Table1Check>> jobs;
  jobs.reserve(rows.size());
  for (const auto& row : rows) {
    jobs.push_back(std::async(std::launch::async, [&row, &tol, &q, with_sigmas] {
      const auto p = GpdParams::from_shape(row.B, row.x_t, row.alpha);
      const auto grid = build_first_moment_grid(p, kDefaultGridNodes, q);
      Table1Check c{};
      c.year = row.year;
      c.beta_table = row.beta;
      c.beta_model = p.tail_amplitude();
      c.beta_relative_delta = (c.beta_model - row.beta) / row.beta;
      c.gini_table = row.gini_star;
      c.gini_model = gini(grid);
      c.gini_delta = c.gini_model - row.gini_star;
      c.u_table = row.u_star;
      c.u_model = gompertz_share(grid);
      c.u_delta = c.u_model - row.u_star;
      if (with_sigmas) {
        const UncertaintyInputs sigmas{
            .rate = row.B_sigma,
            .threshold = 0.0,
            .exponent = row.alpha_sigma,
            .location_relative = kObservedLocationDiscrepancy,
            .amplitude = row.beta_sigma,
        };
        c.gini_sigma = propagate_uncertainty(p, sigmas, InequalityTarget::Gini, q);
        c.u_sigma = propagate_uncertainty(p, sigmas, InequalityTarget::GompertzShare, q);
      }
      c.pass = std::abs(c.beta_relative_delta) <= tol.beta_relative &&
               std::abs(c.gini_delta) <= tol.gini && std::abs(c.u_delta) <= tol.u;
      return c;
    }));
  }
  Table1Report report{tol, {}};
  for (auto& j : jobs) report.rows.push_back(j.get());
  return report;
}

SeriesReport table1_series(const QuadratureConfig& q) {
  const auto rows = table1_rows();
  std::vector<std::future<SeriesRow>> jobs;
  for (const auto& row : rows) {
    jobs.push_back(std::async(std::launch::async, [&row, &q] {
      const auto grid = build_first_moment_grid(
          GpdParams::from_shape(row.B, row.x_t, row.alpha), kDefaultGridNodes, q);
      return SeriesRow{row.year, row.gini_original, gini(grid), row.u_original,
                       gompertz_share(grid)};
    }));
  }
  SeriesReport report;
  for (auto& j : jobs) report.rows.push_back(j.get());
  return report;
}

SeriesReport manifest_series(const std::filesystem::path& manifest, const RunConfig& cfg) {
  std::ifstream in(manifest);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + manifest.string() + "'");
  struct Entry {
    int year;
    std::filesystem::path path;
  };
  std::vector<Entry> entries;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(number) + ": expected 'year,path'");
    }
    const double year = parse_number(line.substr(0, comma),
                                     "manifest line " + std::to_string(number));
    std::filesystem::path path = line.substr(comma + 1);
    if (path.is_relative()) path = manifest.parent_path() / path;
    entries.push_back({static_cast<int>(year), path});
  }
  if (entries.empty()) throw Error(ErrorCode::EmptyInput, "series manifest lists no years");
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.year < b.year; });

  std::vector<std::future<SeriesRow>> jobs;
  for (const auto& e : entries) {
    jobs.push_back(std::async(std::launch::async, [&e, &cfg] {
      const auto dist = std::get<EmpiricalDistribution>(
          ingest(e.path, InputFormat::Raw, cfg.normalization));
      const FitResult f = fit(dist, cfg.fit);
      const auto grid = build_first_moment_grid(f.params, kDefaultGridNodes, cfg.quadrature);
      return SeriesRow{e.year, empirical_gini(dist), gini(grid),
                       empirical_share(dist, f.params.threshold()), gompertz_share(grid)};
    }));
  }
  SeriesReport report;
  for (auto& j : jobs) report.rows.push_back(j.get());
  return report;
}

EvalReport eval_report(const GpdParams& p, const std::vector<double>& xs,
                       const QuadratureConfig& q) {
  if (xs.empty()) throw Error(ErrorCode::Usage, "eval needs at least one income (--x)");
  const auto grid = build_first_moment_grid(p, kDefaultGridNodes, q);
  EvalReport r;
  for (double x : xs) {
    r.rows.push_back({x, ccdf(x, p), cdf(x, p), density(x, p),
                      first_moment_distribution(x, grid)});
  }
  return r;
}

std::string sample_text(const GpdParams& p, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::Usage, "sample size must be at least 1");
  const auto draws = draw(SampleSpec{n, seed}, p);
  std::string text;
  text.reserve(draws.size() * 20);
  for (double x : draws) {
    text += format_number(x);
    text += '\n';
  }
  return text;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit(cfg, write_report(fit_report(cfg), cfg.output_format), out);
    return 0;
  });
}

int cmd_lorenz(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    GpdParams p = cfg.params ? *cfg.params : GpdParams::from_shape(1.0, 1.0, 2.0);
    if (!cfg.params) {
      const auto data =
          ingest(require_input(cfg, "lorenz"), cfg.input_format, cfg.normalization);
      p = fit_dataset(data, cfg.fit).params;
    }
    emit(cfg, write_report(lorenz_report(p, cfg.points, cfg.quadrature), cfg.output_format),
         out);
    return 0;
  });
}

int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto report = table1_report(cfg.tolerances, cfg.quadrature);
    emit(cfg, write_report(report, cfg.output_format), out);
    return report.pass() ? 0 : 1;
  });
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit(cfg, sample_text(require_params(cfg, "sample"), cfg.sample_size, cfg.seed), out);
    return 0;
  });
}

int cmd_gini_series(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto report = cfg.series_manifest ? manifest_series(*cfg.series_manifest, cfg)
                                            : table1_series(cfg.quadrature);
    emit(cfg, write_report(report, cfg.output_format), out);
    return 0;
  });
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit(cfg,
         write_report(eval_report(require_params(cfg, "eval"), cfg.eval_x, cfg.quadrature),
                      cfg.output_format),
         out);
    return 0;
  });
}

}  // namespace gpd
