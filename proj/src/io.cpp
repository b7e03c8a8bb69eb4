#include "gpd/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <system_error>

#include "gpd/error.hpp"

namespace gpd {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

Error malformed(std::size_t line, const std::string& what) {
  return Error(ErrorCode::MalformedInput, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

InputFormat parse_input_format(std::string_view text) {
  if (text == "raw") return InputFormat::Raw;
  if (text == "binned") return InputFormat::Binned;
  throw Error(ErrorCode::Usage, "unknown input format '" + std::string(text) +
                                    "', expected raw or binned");
}

Normalization parse_normalization(std::string_view text) {
  if (text == "mean") return {NormalizationMode::Mean, 1.0};
  if (text == "none") return {NormalizationMode::None, 1.0};
  if (text.starts_with("const=")) {
    const auto v = to_double(text.substr(6));
    if (!v || !(*v > 0.0)) {
      throw Error(ErrorCode::Usage, "normalization constant must be a positive number");
    }
    return {NormalizationMode::Constant, *v};
  }
  throw Error(ErrorCode::Usage, "unknown normalization '" + std::string(text) +
                                    "', expected mean, none or const=<v>");
}

std::vector<double> read_raw_incomes(std::istream& in) {
  std::vector<double> values;
  std::string line;
  bool seen_content = false;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto field = trim(line);
    if (field.empty()) continue;
    const auto v = to_double(field);
    if (!v) {
      if (!seen_content) {
        seen_content = true;  // header
        continue;
      }
      throw malformed(number, "expected a number, got '" + std::string(field) + "'");
    }
    seen_content = true;
    if (!std::isfinite(*v) || *v < 0.0) {
      throw malformed(number, "income must be finite and non-negative");
    }
    values.push_back(*v);
  }
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "input contains no incomes");
  return values;
}

BinnedCcdf read_binned_ccdf(std::istream& in) {
  std::vector<CcdfPoint> points;
  std::string line;
  bool seen_content = false;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    const auto x = comma == std::string_view::npos ? std::nullopt : to_double(row.substr(0, comma));
    const auto F = comma == std::string_view::npos ? std::nullopt : to_double(row.substr(comma + 1));
    if (!x || !F) {
      if (!seen_content) {
        seen_content = true;
        continue;
      }
      throw malformed(number, "expected 'x,F', got '" + std::string(row) + "'");
    }
    seen_content = true;
    points.push_back(CcdfPoint{*x, *F});
  }
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "input contains no CCDF points");
  return BinnedCcdf::make(std::move(points));
}

Dataset ingest(const std::filesystem::path& path, InputFormat format,
               const Normalization& normalization) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  if (format == InputFormat::Binned) return read_binned_ccdf(in);
  return normalize(read_raw_incomes(in), normalization);
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

double parse_number(std::string_view text, std::string_view context) {
  const auto v = to_double(text);
  if (!v) {
    throw Error(ErrorCode::MalformedInput,
                std::string(context) + ": not a number: '" + std::string(text) + "'");
  }
  return *v;
}

}  // namespace gpd
