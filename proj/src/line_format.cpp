#include "line_format.hpp"

#include <cctype>

namespace punnet::detail {

namespace {

bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string strip_line(std::string_view line) {
  std::string out;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    if (c == '%' && !quoted) break;
    out.push_back(c);
  }
  return std::string(trim(out));
}

std::optional<KeyValue> split_key_value(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '"') quoted = !quoted;
    if (c == '=' && !quoted) {
      KeyValue kv;
      kv.key = std::string(trim(line.substr(0, i)));
      kv.value = std::string(trim(line.substr(i + 1)));
      if (kv.key.empty()) return std::nullopt;
      return kv;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::string>> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (space(text[i])) {
      ++i;
      continue;
    }
    if (text[i] == '"') {
      std::size_t end = text.find('"', i + 1);
      if (end == std::string_view::npos) return std::nullopt;
      tokens.emplace_back(text.substr(i + 1, end - i - 1));
      i = end + 1;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !space(text[i]) && text[i] != '"') ++i;
    tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

std::string quote_if_needed(std::string_view value) {
  bool needs = value.empty();
  for (char c : value) {
    if (space(c) || c == '"' || c == '%' || c == '=') needs = true;
  }
  if (!needs) return std::string(value);
  return '"' + std::string(value) + '"';
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

}  // namespace punnet::detail
