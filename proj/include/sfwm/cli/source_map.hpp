#pragma once

#include <map>
#include <string>
#include <string_view>

namespace sfwm::cli {

/// Line numbers of the members of a JSON document, keyed by JSON pointer
/// ("/pump/sigma_t", "/sweep/values/2"). Built by a lexical pass over text
/// that has already parsed successfully.
class SourceMap {
 public:
  static SourceMap scan(std::string_view text);

  /// 1-based line of the member, or of its closest recorded ancestor.
  int line_of(std::string_view pointer) const;

 private:
  std::map<std::string, int, std::less<>> lines_;
};

/// "/pump/sigma_t" -> "pump.sigma_t"; "" -> "<root>".
std::string display_path(std::string_view pointer);

}  // namespace sfwm::cli
