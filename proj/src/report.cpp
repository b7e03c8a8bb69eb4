#include "gpd/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "gpd/error.hpp"
#include "gpd/io.hpp"

namespace gpd {

using json = nlohmann::ordered_json;

namespace {

template <class T>
using DoubleField = std::pair<const char*, double T::*>;

constexpr std::array<DoubleField<FitReport>, 16> kFitFields{{
    {"B", &FitReport::B},
    {"B_sigma", &FitReport::B_sigma},
    {"x_t", &FitReport::x_t},
    {"alpha", &FitReport::alpha},
    {"alpha_sigma", &FitReport::alpha_sigma},
    {"beta", &FitReport::beta},
    {"beta_sigma", &FitReport::beta_sigma},
    {"A_fitted", &FitReport::A_fitted},
    {"A_discrepancy", &FitReport::A_discrepancy},
    {"r2_gompertz", &FitReport::r2_gompertz},
    {"r2_pareto", &FitReport::r2_pareto},
    {"gini", &FitReport::gini},
    {"gini_sigma", &FitReport::gini_sigma},
    {"u", &FitReport::u},
    {"u_sigma", &FitReport::u_sigma},
    {"mean_income", &FitReport::mean_income},
}};

constexpr std::array<DoubleField<Table1Check>, 11> kCheckFields{{
    {"beta_table", &Table1Check::beta_table},
    {"beta_model", &Table1Check::beta_model},
    {"beta_relative_delta", &Table1Check::beta_relative_delta},
    {"gini_table", &Table1Check::gini_table},
    {"gini_model", &Table1Check::gini_model},
    {"gini_delta", &Table1Check::gini_delta},
    {"gini_sigma", &Table1Check::gini_sigma},
    {"u_table", &Table1Check::u_table},
    {"u_model", &Table1Check::u_model},
    {"u_delta", &Table1Check::u_delta},
    {"u_sigma", &Table1Check::u_sigma},
}};

constexpr std::array<DoubleField<SeriesRow>, 4> kSeriesFields{{
    {"gini_original", &SeriesRow::gini_original},
    {"gini_star", &SeriesRow::gini_star},
    {"u_original", &SeriesRow::u_original},
    {"u_star", &SeriesRow::u_star},
}};

constexpr std::array<DoubleField<EvalRow>, 5> kEvalFields{{
    {"x", &EvalRow::x},
    {"ccdf", &EvalRow::ccdf},
    {"cdf", &EvalRow::cdf},
    {"density", &EvalRow::density},
    {"F1", &EvalRow::F1},
}};

constexpr std::array<DoubleField<Table1Tolerances>, 3> kToleranceFields{{
    {"tol_beta", &Table1Tolerances::beta_relative},
    {"tol_gini", &Table1Tolerances::gini},
    {"tol_u", &Table1Tolerances::u},
}};

[[noreturn]] void bad_report(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, "unreadable report: " + what);
}

// --- CSV ------------------------------------------------------------------

using Row = std::vector<std::string>;

class CsvWriter {
 public:
  explicit CsvWriter(const Row& header) { line(header); }

  void line(const Row& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << fields[i];
    }
    out_ << '\n';
  }

  [[nodiscard]] std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

Row split(std::string_view line) {
  Row fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

// Rows of a CSV document whose header must equal `header` exactly.
std::vector<Row> read_csv(const std::string& text, const Row& header) {
  std::istringstream in(text);
  std::string line;
  std::vector<Row> rows;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line);
    if (!have_header) {
      if (fields != header) bad_report("unexpected CSV header '" + line + "'");
      have_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      bad_report("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                 std::to_string(header.size()));
    }
    rows.push_back(std::move(fields));
  }
  if (!have_header) bad_report("missing CSV header");
  return rows;
}

int parse_int(const std::string& s, const char* what) {
  const double v = parse_number(s, what);
  if (v != std::floor(v)) bad_report(std::string(what) + " is not an integer");
  return static_cast<int>(v);
}

bool parse_flag(const std::string& s, const char* what) {
  if (s == "1") return true;
  if (s == "0") return false;
  bad_report(std::string(what) + " must be 0 or 1");
}

template <class T, std::size_t N>
void append_names(Row& header, const std::array<DoubleField<T>, N>& fields) {
  for (const auto& [name, member] : fields) header.emplace_back(name);
}

template <class T, std::size_t N>
void append_values(Row& row, const T& obj, const std::array<DoubleField<T>, N>& fields) {
  for (const auto& [name, member] : fields) row.push_back(format_number(obj.*member));
}

template <class T, std::size_t N>
std::size_t read_values(const Row& row, std::size_t at, T& obj,
                        const std::array<DoubleField<T>, N>& fields) {
  for (const auto& [name, member] : fields) obj.*member = parse_number(row[at++], name);
  return at;
}

// --- JSON -----------------------------------------------------------------

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad_report(e.what());
  }
}

template <class T, std::size_t N>
void to_json_fields(json& j, const T& obj, const std::array<DoubleField<T>, N>& fields) {
  for (const auto& [name, member] : fields) j[name] = obj.*member;
}

template <class T, std::size_t N>
void from_json_fields(const json& j, T& obj, const std::array<DoubleField<T>, N>& fields) {
  for (const auto& [name, member] : fields) {
    const auto it = j.find(name);
    if (it == j.end() || !it->is_number()) bad_report(std::string("missing number '") + name + "'");
    obj.*member = it->template get<double>();
  }
}

template <class V>
V get_field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) bad_report(std::string("missing field '") + name + "'");
  try {
    return it->template get<V>();
  } catch (const json::exception&) {
    bad_report(std::string("field '") + name + "' has the wrong type");
  }
}

const json& get_array(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end() || !it->is_array()) bad_report(std::string("missing array '") + name + "'");
  return *it;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::Usage,
              "unknown output format '" + std::string(text) + "', expected json or csv");
}

bool Table1Report::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const Table1Check& c) { return c.pass; });
}

SeriesSummary SeriesReport::summary() const {
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, "Gini series has no years");
  SeriesSummary s{0.0, rows.front().year, 0.0, rows.front().year};
  for (const auto& r : rows) {
    const double dg = std::abs(r.gini_star - r.gini_original);
    const double du = std::abs(r.u_star - r.u_original) / r.u_original;
    if (dg > s.max_gini_discrepancy) {
      s.max_gini_discrepancy = dg;
      s.max_gini_year = r.year;
    }
    if (du > s.max_u_relative_discrepancy) {
      s.max_u_relative_discrepancy = du;
      s.max_u_year = r.year;
    }
  }
  return s;
}

// --- fit ------------------------------------------------------------------

std::string write_report(const FitReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j = json::object();
    if (r.year) j["year"] = *r.year;
    to_json_fields(j, r, kFitFields);
    return dump(j);
  }
  Row header{"year"};
  append_names(header, kFitFields);
  CsvWriter csv(header);
  Row row{r.year ? std::to_string(*r.year) : std::string()};
  append_values(row, r, kFitFields);
  csv.line(row);
  return csv.str();
}

FitReport read_fit_report(const std::string& text, OutputFormat format) {
  FitReport r{};
  if (format == OutputFormat::Json) {
    const json j = parse_json(text);
    if (!j.is_object()) bad_report("fit report is not an object");
    if (j.contains("year")) r.year = get_field<int>(j, "year");
    from_json_fields(j, r, kFitFields);
    return r;
  }
  Row header{"year"};
  append_names(header, kFitFields);
  const auto rows = read_csv(text, header);
  if (rows.size() != 1) bad_report("fit report must have exactly one row");
  if (!rows[0][0].empty()) r.year = parse_int(rows[0][0], "year");
  read_values(rows[0], 1, r, kFitFields);
  return r;
}

// --- lorenz ---------------------------------------------------------------

std::string write_report(const LorenzReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"F", row.F}, {"F1", row.F1}, {"transition", row.transition}});
    }
    return dump(json{{"rows", rows}});
  }
  CsvWriter csv({"F", "F1", "transition"});
  for (const auto& row : r.rows) {
    csv.line({format_number(row.F), format_number(row.F1), row.transition ? "1" : "0"});
  }
  return csv.str();
}

LorenzReport read_lorenz_report(const std::string& text, OutputFormat format) {
  LorenzReport r;
  if (format == OutputFormat::Json) {
    const json j = parse_json(text);
    for (const auto& row : get_array(j, "rows")) {
      r.rows.push_back({get_field<double>(row, "F"), get_field<double>(row, "F1"),
                        get_field<bool>(row, "transition")});
    }
    return r;
  }
  for (const auto& row : read_csv(text, {"F", "F1", "transition"})) {
    r.rows.push_back({parse_number(row[0], "F"), parse_number(row[1], "F1"),
                      parse_flag(row[2], "transition")});
  }
  return r;
}

// --- table1 ---------------------------------------------------------------

std::string write_report(const Table1Report& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json tol = json::object();
    to_json_fields(tol, r.tolerances, kToleranceFields);
    json rows = json::array();
    for (const auto& c : r.rows) {
      json row{{"year", c.year}};
      to_json_fields(row, c, kCheckFields);
      row["pass"] = c.pass;
      rows.push_back(row);
    }
    return dump(json{{"tolerances", tol}, {"rows", rows}, {"pass", r.pass()}});
  }
  Row header{"year"};
  append_names(header, kCheckFields);
  header.emplace_back("pass");
  append_names(header, kToleranceFields);
  CsvWriter csv(header);
  for (const auto& c : r.rows) {
    Row row{std::to_string(c.year)};
    append_values(row, c, kCheckFields);
    row.emplace_back(c.pass ? "1" : "0");
    append_values(row, r.tolerances, kToleranceFields);
    csv.line(row);
  }
  return csv.str();
}

Table1Report read_table1_report(const std::string& text, OutputFormat format) {
  Table1Report r;
  if (format == OutputFormat::Json) {
    const json j = parse_json(text);
    const auto tol = j.find("tolerances");
    if (tol == j.end()) bad_report("missing tolerances");
    from_json_fields(*tol, r.tolerances, kToleranceFields);
    for (const auto& row : get_array(j, "rows")) {
      Table1Check c{};
      c.year = get_field<int>(row, "year");
      from_json_fields(row, c, kCheckFields);
      c.pass = get_field<bool>(row, "pass");
      r.rows.push_back(c);
    }
    return r;
  }
  Row header{"year"};
  append_names(header, kCheckFields);
  header.emplace_back("pass");
  append_names(header, kToleranceFields);
  for (const auto& row : read_csv(text, header)) {
    Table1Check c{};
    c.year = parse_int(row[0], "year");
    std::size_t at = read_values(row, 1, c, kCheckFields);
    c.pass = parse_flag(row[at++], "pass");
    read_values(row, at, r.tolerances, kToleranceFields);
    r.rows.push_back(c);
  }
  return r;
}

// --- gini series ----------------------------------------------------------

std::string write_report(const SeriesReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& s : r.rows) {
      json row{{"year", s.year}};
      to_json_fields(row, s, kSeriesFields);
      rows.push_back(row);
    }
    const auto sum = r.summary();
    return dump(json{{"rows", rows},
                     {"summary",
                      {{"max_gini_discrepancy", sum.max_gini_discrepancy},
                       {"max_gini_year", sum.max_gini_year},
                       {"max_u_relative_discrepancy", sum.max_u_relative_discrepancy},
                       {"max_u_year", sum.max_u_year}}}});
  }
  Row header{"year"};
  append_names(header, kSeriesFields);
  CsvWriter csv(header);
  for (const auto& s : r.rows) {
    Row row{std::to_string(s.year)};
    append_values(row, s, kSeriesFields);
    csv.line(row);
  }
  return csv.str();
}

SeriesReport read_series_report(const std::string& text, OutputFormat format) {
  SeriesReport r;
  if (format == OutputFormat::Json) {
    const json j = parse_json(text);
    for (const auto& row : get_array(j, "rows")) {
      SeriesRow s{};
      s.year = get_field<int>(row, "year");
      from_json_fields(row, s, kSeriesFields);
      r.rows.push_back(s);
    }
    return r;
  }
  Row header{"year"};
  append_names(header, kSeriesFields);
  for (const auto& row : read_csv(text, header)) {
    SeriesRow s{};
    s.year = parse_int(row[0], "year");
    read_values(row, 1, s, kSeriesFields);
    r.rows.push_back(s);
  }
  return r;
}

// --- eval -----------------------------------------------------------------

std::string write_report(const EvalReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& e : r.rows) {
      json row = json::object();
      to_json_fields(row, e, kEvalFields);
      rows.push_back(row);
    }
    return dump(json{{"rows", rows}});
  }
  Row header;
  append_names(header, kEvalFields);
  CsvWriter csv(header);
  for (const auto& e : r.rows) {
    Row row;
    append_values(row, e, kEvalFields);
    csv.line(row);
  }
  return csv.str();
}

EvalReport read_eval_report(const std::string& text, OutputFormat format) {
  EvalReport r;
  if (format == OutputFormat::Json) {
    const json j = parse_json(text);
    for (const auto& row : get_array(j, "rows")) {
      EvalRow e{};
      from_json_fields(row, e, kEvalFields);
      r.rows.push_back(e);
    }
    return r;
  }
  Row header;
  append_names(header, kEvalFields);
  for (const auto& row : read_csv(text, header)) {
    EvalRow e{};
    read_values(row, 0, e, kEvalFields);
    r.rows.push_back(e);
  }
  return r;
}

}  // namespace gpd
