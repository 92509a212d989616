#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace punnet {

enum class WordCategory { Noun, Verb, Adjective, NounPhrase };

// Closed label set. Loading rejects anything else.
enum class RelationLabel {
  Synonym,
  Class,
  Location,
  Action,
  Adjective,
  SpecifyingAdj,
  MadeOf,
  Uses,
  PartOf,
};

std::string_view to_string(WordCategory category);
std::string_view to_string(RelationLabel label);
std::optional<WordCategory> parse_category(std::string_view text);
std::optional<RelationLabel> parse_relation_label(std::string_view text);
const std::vector<RelationLabel>& all_relation_labels();

// Raised by the file-format loaders. line() is 1-based, 0 when no single
// source line is at fault (e.g. a dangling cross reference).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LexicalEntry {
  std::string id;
  WordCategory category = WordCategory::Noun;
  std::string written_form;
  bool vowel_start = false;
  bool countable = true;
  // noun_phrase entries only: the two constituent lexemes, in surface order.
  std::optional<std::pair<std::string, std::string>> constituents;
  // verbs only: explicit third-person singular, e.g. "breaks down".
  std::optional<std::string> third_person_form;
  // Values are sorted and unique per label. A value naming another entry is
  // a lexeme reference; anything else is a plain symbol.
  std::map<RelationLabel, std::vector<std::string>> relations;

  bool operator==(const LexicalEntry&) const = default;
};

// Immutable after load. All queries are const and deterministic.
class Lexicon {
 public:
  Lexicon() = default;

  // Parses the block-structured lexicon format (see README). Applies the
  // symmetric synonym closure and builds the inverse indices. Throws
  // ParseError on malformed input or broken cross references.
  static Lexicon load(std::string_view source);

  // nullptr when absent; never throws.
  const LexicalEntry* lookup(std::string_view id) const;

  // Values asserted for (id, label); empty for an absent label.
  // Throws std::invalid_argument for an unknown lexeme.
  const std::vector<std::string>& relation_values(std::string_view id,
                                                  RelationLabel label) const;

  // Inverse query: ids of every entry asserting (label, value). Empty set
  // for an unknown value; never throws.
  const std::set<std::string>& lexemes_with(RelationLabel label,
                                            std::string_view value) const;

  // True iff surface equals the written form of some noun_phrase entry,
  // case-insensitive after whitespace normalization.
  bool genuine_noun_phrase(std::string_view surface) const;

  // True when the value names an entry (distinguishes lexeme references
  // from plain symbols in relation slots).
  bool is_lexeme(std::string_view value) const;

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, LexicalEntry>& entries() const { return entries_; }

  // Canonical text form; load(serialize()) reproduces the lexicon exactly.
  std::string serialize() const;

  bool operator==(const Lexicon& other) const { return entries_ == other.entries_; }

 private:
  void index();

  std::map<std::string, LexicalEntry> entries_;
  std::map<RelationLabel, std::map<std::string, std::set<std::string>>> inverse_;
  std::set<std::string> phrase_surfaces_;
};

// Lowercases and collapses whitespace runs to single spaces.
std::string normalize_surface(std::string_view text);

bool valid_lexeme_id(std::string_view id);

}  // namespace punnet
