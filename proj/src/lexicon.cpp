#include "punnet/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "line_format.hpp"

namespace punnet {

namespace {

constexpr std::string_view kCategoryNames[] = {"noun", "verb", "adjective", "noun_phrase"};
constexpr std::string_view kLabelNames[] = {
    "synonym", "class",         "location", "action", "adjective",
    "specifying_adj", "made_of", "uses",   "part_of"};

bool yes_no(std::string_view text, std::size_t line, std::string_view key, bool& out) {
  if (text == "yes") {
    out = true;
    return true;
  }
  if (text == "no") {
    out = false;
    return true;
  }
  throw ParseError("value of '" + std::string(key) + "' must be yes or no, got '" +
                       std::string(text) + "'",
                   line);
}

bool vowel_letter(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return true;
    default:
      return false;
  }
}

// Entry under construction; bools stay optional until defaults are settled.
struct PendingEntry {
  LexicalEntry entry;
  std::optional<bool> vowel_start;
  std::optional<bool> countable;
  std::optional<WordCategory> category;
  std::size_t line = 0;
  bool has_written_form = false;
};

void add_relation(LexicalEntry& entry, RelationLabel label, const std::string& value) {
  auto& values = entry.relations[label];
  auto pos = std::lower_bound(values.begin(), values.end(), value);
  if (pos == values.end() || *pos != value) values.insert(pos, value);
}

}  // namespace

std::string_view to_string(WordCategory category) {
  return kCategoryNames[static_cast<int>(category)];
}

std::string_view to_string(RelationLabel label) {
  return kLabelNames[static_cast<int>(label)];
}

std::optional<WordCategory> parse_category(std::string_view text) {
  for (int i = 0; i < 4; ++i) {
    if (text == kCategoryNames[i]) return static_cast<WordCategory>(i);
  }
  return std::nullopt;
}

std::optional<RelationLabel> parse_relation_label(std::string_view text) {
  for (int i = 0; i < 9; ++i) {
    if (text == kLabelNames[i]) return static_cast<RelationLabel>(i);
  }
  return std::nullopt;
}

const std::vector<RelationLabel>& all_relation_labels() {
  static const std::vector<RelationLabel> labels = [] {
    std::vector<RelationLabel> out;
    for (int i = 0; i < 9; ++i) out.push_back(static_cast<RelationLabel>(i));
    return out;
  }();
  return labels;
}

ParseError::ParseError(const std::string& message, std::size_t line)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

bool valid_lexeme_id(std::string_view id) {
  if (id.empty()) return false;
  if (id.front() < 'a' || id.front() > 'z') return false;
  for (char c : id) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string normalize_surface(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

Lexicon Lexicon::load(std::string_view source) {
  Lexicon lexicon;
  std::vector<PendingEntry> pending;
  PendingEntry* current = nullptr;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    ++line_no;
    std::string line = detail::strip_line(source.substr(start, end - start));
    start = end + 1;
    if (line.empty()) {
      current = nullptr;  // blank line closes the block
      continue;
    }

    auto kv = detail::split_key_value(line);
    if (!kv) throw ParseError("expected 'key = value', got '" + line + "'", line_no);
    auto tokens = detail::tokenize(kv->value);
    if (!tokens) throw ParseError("unterminated quote in value of '" + kv->key + "'", line_no);

    if (kv->key == "lexeme") {
      if (current != nullptr)
        throw ParseError("'lexeme' must open a new block (missing blank line before it?)",
                         line_no);
      if (tokens->size() != 1 || !valid_lexeme_id((*tokens)[0]))
        throw ParseError("'lexeme' needs one id matching [a-z][a-z0-9_]*", line_no);
      pending.emplace_back();
      current = &pending.back();
      current->entry.id = (*tokens)[0];
      current->line = line_no;
      continue;
    }
    if (current == nullptr)
      throw ParseError("'" + kv->key + "' appears before any 'lexeme' line", line_no);

    const std::string& id = current->entry.id;
    if (kv->key == "category") {
      if (current->category)
        throw ParseError("duplicate 'category' for lexeme " + id, line_no);
      if (tokens->size() != 1 || !parse_category((*tokens)[0]))
        throw ParseError("category of " + id +
                             " must be noun, verb, adjective, or noun_phrase",
                         line_no);
      current->category = *parse_category((*tokens)[0]);
    } else if (kv->key == "written_form") {
      if (current->has_written_form)
        throw ParseError("duplicate 'written_form' for lexeme " + id, line_no);
      if (tokens->size() != 1 || (*tokens)[0].empty())
        throw ParseError("written_form of " + id + " must be one (possibly quoted) value",
                         line_no);
      current->entry.written_form = (*tokens)[0];
      current->has_written_form = true;
    } else if (kv->key == "vowel_start") {
      if (current->vowel_start)
        throw ParseError("duplicate 'vowel_start' for lexeme " + id, line_no);
      bool value = false;
      if (tokens->size() != 1) throw ParseError("vowel_start of " + id + " needs one value", line_no);
      yes_no((*tokens)[0], line_no, "vowel_start", value);
      current->vowel_start = value;
    } else if (kv->key == "countable") {
      if (current->countable)
        throw ParseError("duplicate 'countable' for lexeme " + id, line_no);
      bool value = false;
      if (tokens->size() != 1) throw ParseError("countable of " + id + " needs one value", line_no);
      yes_no((*tokens)[0], line_no, "countable", value);
      current->countable = value;
    } else if (kv->key == "constituents") {
      if (current->entry.constituents)
        throw ParseError("duplicate 'constituents' for lexeme " + id, line_no);
      if (tokens->size() != 2)
        throw ParseError("constituents of " + id + " must name exactly two lexemes", line_no);
      current->entry.constituents = {(*tokens)[0], (*tokens)[1]};
    } else if (kv->key == "third_person_form") {
      if (current->entry.third_person_form)
        throw ParseError("duplicate 'third_person_form' for lexeme " + id, line_no);
      if (tokens->size() != 1 || (*tokens)[0].empty())
        throw ParseError("third_person_form of " + id + " needs one value", line_no);
      current->entry.third_person_form = (*tokens)[0];
    } else if (auto label = parse_relation_label(kv->key)) {
      if (tokens->size() != 1 || (*tokens)[0].empty())
        throw ParseError("relation '" + kv->key + "' of " + id + " needs one value per line",
                         line_no);
      add_relation(current->entry, *label, (*tokens)[0]);
    } else {
      throw ParseError("unknown key '" + kv->key + "' in lexeme " + id +
                           " (not a slot or relation label)",
                       line_no);
    }
  }

  // Settle defaults and structural rules per entry.
  for (auto& p : pending) {
    LexicalEntry& e = p.entry;
    if (!p.category)
      throw ParseError("lexeme " + e.id + " has no category", p.line);
    e.category = *p.category;
    if (!p.has_written_form)
      throw ParseError("lexeme " + e.id + " has no written_form", p.line);
    if (e.category == WordCategory::NounPhrase && !e.constituents)
      throw ParseError("noun_phrase " + e.id + " has no constituents", p.line);
    if (e.category != WordCategory::NounPhrase && e.constituents)
      throw ParseError("lexeme " + e.id + " is not a noun_phrase but lists constituents",
                       p.line);
    if (e.category != WordCategory::Verb && e.third_person_form)
      throw ParseError("lexeme " + e.id + " is not a verb but lists third_person_form",
                       p.line);
    if (p.vowel_start) {
      e.vowel_start = *p.vowel_start;
    } else {
      e.vowel_start = !e.written_form.empty() && vowel_letter(e.written_form.front());
    }
    e.countable = p.countable.value_or(true);

    auto [it, inserted] = lexicon.entries_.emplace(e.id, e);
    (void)it;
    if (!inserted) throw ParseError("duplicate lexeme id " + e.id, p.line);
  }

  // Cross-reference pass: constituents and synonym values must be entries.
  for (auto& [id, e] : lexicon.entries_) {
    if (e.constituents) {
      const auto& [first, second] = *e.constituents;
      for (const std::string& c : {first, second}) {
        if (!lexicon.entries_.count(c))
          throw ParseError("noun_phrase " + id + " references undeclared lexeme " + c);
      }
      std::string joined = lexicon.entries_.at(first).written_form + " " +
                           lexicon.entries_.at(second).written_form;
      if (joined != e.written_form)
        throw ParseError("noun_phrase " + id + " written_form '" + e.written_form +
                         "' does not equal its constituents' forms '" + joined + "'");
      if (std::count(e.written_form.begin(), e.written_form.end(), ' ') != 1)
        throw ParseError("noun_phrase " + id + " written_form must contain exactly one space");
    }
    auto syn = e.relations.find(RelationLabel::Synonym);
    if (syn != e.relations.end()) {
      for (const std::string& value : syn->second) {
        if (!lexicon.entries_.count(value))
          throw ParseError("synonym of " + id + " references undeclared lexeme " + value);
        if (value == id)
          throw ParseError("lexeme " + id + " lists itself as a synonym");
      }
    }
  }

  // Symmetric closure over synonym edges.
  std::vector<std::pair<std::string, std::string>> closures;
  for (const auto& [id, e] : lexicon.entries_) {
    auto syn = e.relations.find(RelationLabel::Synonym);
    if (syn == e.relations.end()) continue;
    for (const std::string& value : syn->second) closures.emplace_back(value, id);
  }
  for (const auto& [id, value] : closures)
    add_relation(lexicon.entries_.at(id), RelationLabel::Synonym, value);

  lexicon.index();
  return lexicon;
}

void Lexicon::index() {
  inverse_.clear();
  phrase_surfaces_.clear();
  for (const auto& [id, e] : entries_) {
    for (const auto& [label, values] : e.relations) {
      for (const std::string& value : values) inverse_[label][value].insert(id);
    }
    if (e.category == WordCategory::NounPhrase)
      phrase_surfaces_.insert(normalize_surface(e.written_form));
  }
}

const LexicalEntry* Lexicon::lookup(std::string_view id) const {
  auto it = entries_.find(std::string(id));
  return it == entries_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& Lexicon::relation_values(std::string_view id,
                                                         RelationLabel label) const {
  static const std::vector<std::string> kEmpty;
  auto it = entries_.find(std::string(id));
  if (it == entries_.end())
    throw std::invalid_argument("unknown lexeme " + std::string(id));
  auto rel = it->second.relations.find(label);
  return rel == it->second.relations.end() ? kEmpty : rel->second;
}

const std::set<std::string>& Lexicon::lexemes_with(RelationLabel label,
                                                   std::string_view value) const {
  static const std::set<std::string> kEmpty;
  auto by_label = inverse_.find(label);
  if (by_label == inverse_.end()) return kEmpty;
  auto it = by_label->second.find(std::string(value));
  return it == by_label->second.end() ? kEmpty : it->second;
}

bool Lexicon::genuine_noun_phrase(std::string_view surface) const {
  return phrase_surfaces_.count(normalize_surface(surface)) != 0;
}

bool Lexicon::is_lexeme(std::string_view value) const {
  return entries_.count(std::string(value)) != 0;
}

std::string Lexicon::serialize() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [id, e] : entries_) {
    if (!first) out << '\n';
    first = false;
    out << "lexeme = " << id << '\n';
    out << "category = " << to_string(e.category) << '\n';
    out << "written_form = " << detail::quote_if_needed(e.written_form) << '\n';
    out << "vowel_start = " << (e.vowel_start ? "yes" : "no") << '\n';
    out << "countable = " << (e.countable ? "yes" : "no") << '\n';
    if (e.constituents)
      out << "constituents = " << e.constituents->first << ' ' << e.constituents->second
          << '\n';
    if (e.third_person_form)
      out << "third_person_form = " << detail::quote_if_needed(*e.third_person_form) << '\n';
    for (const auto& [label, values] : e.relations) {
      for (const std::string& value : values)
        out << to_string(label) << " = " << detail::quote_if_needed(value) << '\n';
    }
  }
  return out.str();
}

}  // namespace punnet
