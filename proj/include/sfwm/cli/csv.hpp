#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace sfwm::cli {

/// 17 significant digits in scientific notation ("%.16e"): round-trips
/// every finite double and is byte-stable across runs.
std::string format_double(double value);

/// RFC-4180 field quoting: fields containing a comma, quote or line break
/// are wrapped in quotes with embedded quotes doubled.
std::string quote_field(std::string_view field);

/// Writes quoted fields separated by commas and a terminating '\n'.
void write_row(std::ostream& out, std::span<const std::string> fields);

}  // namespace sfwm::cli
