#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypsum/identities.hpp"

namespace hypsum {

enum class OutputFormat { Csv, Json, Markdown, Latex };

std::optional<OutputFormat> output_format_from_name(std::string_view name);

inline constexpr std::string_view kCsvHeader = "identity,nu,i,alpha,mode,lhs,rhs,matched";

/// Lossless text for a report value: "p/q" (or "p") for rationals, 17
/// significant digits for doubles.
std::string format_value(const Value& v);

/// Inverse of format_value. Text containing '.', 'e', "inf" or "nan" is read
/// as a double, anything else as a rational.
Value parse_value(std::string_view text);

/// Renders reports in grid order. CSV and JSON are lossless; Markdown and
/// LaTeX are for reading. Output depends only on the reports.
std::string emit_table(const std::vector<VerificationReport>& reports, OutputFormat format);

}  // namespace hypsum
