#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace supraclust::csv {

/// 17 significant digits, enough to round-trip any double.
std::string format_real(double value);

/// Empty field for an absent value.
std::string format_optional(const std::optional<double>& value);

/// Splits on commas. No quoting: labels must not contain commas.
std::vector<std::string_view> split(std::string_view line);

/// Parses the whole field as a floating point number.
std::optional<double> parse_real(std::string_view field);

}  // namespace supraclust::csv
