#pragma once

// Shared lexical conventions of the lexicon, homonym, and config formats:
// '%' comments, blank-line separation, key = value lines, quoted
// multi-word values. Internal to the library.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace punnet::detail {

// Removes a % comment (quotes protect literal %) and surrounding blanks.
std::string strip_line(std::string_view line);

// Splits "key = value" at the first unquoted '='. Returns nothing for
// lines without one.
struct KeyValue {
  std::string key;
  std::string value; // raw, still quoted
};
std::optional<KeyValue> split_key_value(std::string_view line);

// Whitespace-separated tokens; a "..."-quoted token may contain spaces.
// Quotes must balance. Returns nothing on a lone or unterminated quote.
std::optional<std::vector<std::string>> tokenize(std::string_view text);

// Quotes a value for serialization when it needs it.
std::string quote_if_needed(std::string_view value);

bool is_blank(std::string_view line);

}  // namespace punnet::detail
