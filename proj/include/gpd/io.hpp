#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <variant>

#include "gpd/empirical.hpp"

namespace gpd {

enum class InputFormat { Raw, Binned };

/// Parses "raw" or "binned"; anything else is a usage error.
InputFormat parse_input_format(std::string_view text);

/// Parses "mean", "none" or "const=<v>".
Normalization parse_normalization(std::string_view text);

/// One income per line. The first non-blank line may be a header; any other
/// non-numeric line is a MalformedInput error naming its line number.
std::vector<double> read_raw_incomes(std::istream& in);

/// Comma-separated x,F rows, optional header, checked by BinnedCcdf::make.
BinnedCcdf read_binned_ccdf(std::istream& in);

using Dataset = std::variant<EmpiricalDistribution, BinnedCcdf>;

/// Loads a file in the declared format. Normalization applies to raw input only.
Dataset ingest(const std::filesystem::path& path, InputFormat format,
               const Normalization& normalization);

/// Shortest decimal text that reads back to the same double, locale-free.
std::string format_number(double value);

/// Locale-free strict parse of a whole field; nullopt-like failure is reported
/// as MalformedInput with the given context.
double parse_number(std::string_view text, std::string_view context);

}  // namespace gpd
