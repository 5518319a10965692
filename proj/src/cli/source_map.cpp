#include "sfwm/cli/source_map.hpp"

#include <cctype>
#include <vector>

namespace sfwm::cli {

namespace {

std::string escape_token(std::string_view key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') {
      out += "~0";
    } else if (ch == '/') {
      out += "~1";
    } else {
      out += ch;
    }
  }
  return out;
}

struct Frame {
  std::string path;
  bool is_object = false;
  int index = 0;
  std::string key;
  bool element_seen = false;
};

}  // namespace

SourceMap SourceMap::scan(std::string_view text) {
  SourceMap map;
  map.lines_[""] = 1;
  std::vector<Frame> stack;
  int line = 1;

  const auto child_path = [&stack]() -> std::string {
    if (stack.empty()) return "";
    const Frame& top = stack.back();
    return top.path + "/" + (top.is_object ? top.key : std::to_string(top.index));
  };
  const auto note_array_element = [&](int at_line) {
    if (!stack.empty() && !stack.back().is_object && !stack.back().element_seen) {
      map.lines_.try_emplace(child_path(), at_line);
      stack.back().element_seen = true;
    }
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
    } else if (ch == '{' || ch == '[') {
      note_array_element(line);
      const std::string path = child_path();
      map.lines_.try_emplace(path, line);
      stack.push_back({path, ch == '{', 0, {}, false});
    } else if (ch == '}' || ch == ']') {
      if (!stack.empty()) stack.pop_back();
    } else if (ch == ',') {
      if (!stack.empty() && !stack.back().is_object) {
        ++stack.back().index;
        stack.back().element_seen = false;
      }
    } else if (ch == '"') {
      const int start_line = line;
      std::string value;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\' && i + 1 < text.size()) {
          value += text[++i];
        } else {
          value += text[i];
        }
      }
      std::size_t j = i + 1;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) {
        if (text[j] == '\n') ++line;
        ++j;
      }
      const bool is_key = j < text.size() && text[j] == ':' && !stack.empty() && stack.back().is_object;
      if (is_key) {
        stack.back().key = escape_token(value);
        map.lines_.try_emplace(child_path(), start_line);
        i = j;
      } else {
        note_array_element(start_line);
        i = j - 1;
      }
    } else if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ':') {
      note_array_element(line);
    }
  }
  return map;
}

int SourceMap::line_of(std::string_view pointer) const {
  std::string probe(pointer);
  while (true) {
    if (auto it = lines_.find(probe); it != lines_.end()) return it->second;
    const auto slash = probe.rfind('/');
    if (slash == std::string::npos) return 1;
    probe.resize(slash);
  }
}

std::string display_path(std::string_view pointer) {
  if (pointer.empty()) return "<root>";
  std::string out(pointer.substr(1));
  for (char& ch : out) {
    if (ch == '/') ch = '.';
  }
  return out;
}

}  // namespace sfwm::cli
