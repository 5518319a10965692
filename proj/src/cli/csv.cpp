#include "sfwm/cli/csv.hpp"

#include <array>
#include <cstdio>

namespace sfwm::cli {

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const int n = std::snprintf(buffer.data(), buffer.size(), "%.16e", value);
  return std::string(buffer.data(), static_cast<std::size_t>(n));
}

std::string quote_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& out, std::span<const std::string> fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k > 0) out << ',';
    out << quote_field(fields[k]);
  }
  out << '\n';
}

}  // namespace sfwm::cli
