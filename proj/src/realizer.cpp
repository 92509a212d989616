#include "punnet/realizer.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace punnet {

namespace {

const LexicalEntry& entry_or_throw(std::string_view id, const Lexicon& lexicon) {
  const LexicalEntry* entry = lexicon.lookup(id);
  if (entry == nullptr)
    throw std::invalid_argument("unknown lexeme " + std::string(id));
  return *entry;
}

std::string capitalize(std::string text) {
  if (!text.empty()) text.front() = static_cast<char>(std::toupper(text.front()));
  return text;
}

std::string determiner(bool vowel_start) { return vowel_start ? "an" : "a"; }

LinkRequirement fwd(std::set<RelationLabel> labels,
                    std::set<WordCategory> value_categories = {}) {
  return {std::move(labels), false, std::move(value_categories)};
}

LinkRequirement inv(std::set<RelationLabel> labels,
                    std::set<WordCategory> value_categories = {}) {
  return {std::move(labels), true, std::move(value_categories)};
}

const std::set<WordCategory> kNominal = {WordCategory::Noun, WordCategory::NounPhrase};
const std::set<WordCategory> kVerbOnly = {WordCategory::Verb};
const std::set<WordCategory> kAdjOnly = {WordCategory::Adjective};

JokeTemplate cross_template(std::string name, std::string connective) {
  JokeTemplate t;
  t.name = std::move(name);
  t.pattern = {
      PatternPiece::text("What do you get when you cross "),
      PatternPiece::fragment(0, SlotStyle::NpDet),
      PatternPiece::text(std::move(connective)),
      PatternPiece::fragment(1, SlotStyle::NpDet),
      PatternPiece::text("?"),
  };
  t.per_schema = {
      {"jumper",
       {{0, {"char_mod", inv({RelationLabel::Adjective, RelationLabel::SpecifyingAdj},
                             kNominal)}},
        {1, {"char_hom", inv({RelationLabel::Class, RelationLabel::Synonym}, kNominal)}}}},
  };
  return t;
}

std::vector<JokeTemplate> make_catalogue() {
  std::vector<JokeTemplate> out;

  out.push_back(cross_template("syn_syn", " and "));

  JokeTemplate syn_verb;
  syn_verb.name = "syn_verb";
  syn_verb.pattern = {
      PatternPiece::text("What do you call "),
      PatternPiece::fragment(0, SlotStyle::NpDet),
      PatternPiece::text(" "),
      PatternPiece::fragment(1, SlotStyle::VerbRelativeModal),
      PatternPiece::text("?"),
  };
  syn_verb.per_schema = {
      {"jumper",
       {{0, {"char_mod", inv({RelationLabel::Adjective, RelationLabel::SpecifyingAdj},
                             kNominal)}},
        {1, {"char_hom", fwd({RelationLabel::Action}, kVerbOnly)}}}},
  };
  out.push_back(std::move(syn_verb));

  JokeTemplate use_syn;
  use_syn.name = "use_syn";
  use_syn.pattern = {
      PatternPiece::text("What do you use to "),
      PatternPiece::fragment(0, SlotStyle::VerbBase),
      PatternPiece::text(" "),
      PatternPiece::fragment(1, SlotStyle::NpDet),
      PatternPiece::text("?"),
  };
  use_syn.per_schema = {
      {"lotus",
       {{0, {"char_orig", fwd({RelationLabel::Action}, kVerbOnly)}},
        {1, {"char_hom", fwd({RelationLabel::Synonym}, kNominal)}}}},
      {"queue",
       {{0, {"char_orig", fwd({RelationLabel::Action}, kVerbOnly)}},
        {1, {"char_hom", fwd({RelationLabel::Synonym}, kNominal)}}}},
  };
  out.push_back(std::move(use_syn));

  JokeTemplate class_has_rev;
  class_has_rev.name = "class_has_rev";
  class_has_rev.pattern = {
      PatternPiece::text("What kind of "),
      PatternPiece::fragment(0, SlotStyle::NpBare),
      PatternPiece::text(" has "),
      PatternPiece::fragment(1, SlotStyle::NpDet),
      PatternPiece::text("?"),
  };
  class_has_rev.per_schema = {
      {"queue",
       {{0, {"char_hom", fwd({RelationLabel::Class}, kNominal)}},
        {1, {"char_kept", fwd({RelationLabel::Uses, RelationLabel::MadeOf}, kNominal)}}}},
      {"lotus",
       {{0, {"char_hom", fwd({RelationLabel::Class}, kNominal)}},
        {1, {"char_orig", fwd({RelationLabel::Uses, RelationLabel::MadeOf}, kNominal)}}}},
  };
  out.push_back(std::move(class_has_rev));

  JokeTemplate whats_adj_verb;
  whats_adj_verb.name = "whats_adj_verb";
  whats_adj_verb.pattern = {
      PatternPiece::text("What's "),
      PatternPiece::fragment(0, SlotStyle::AdjectiveBare),
      PatternPiece::text(" and "),
      PatternPiece::fragment(1, SlotStyle::VerbThird),
      PatternPiece::text("?"),
  };
  auto adj_then_action = std::map<int, SlotBinding>{
      {0, {"char_orig",
           fwd({RelationLabel::Adjective, RelationLabel::SpecifyingAdj}, kAdjOnly)}},
      {1, {"char_hom", fwd({RelationLabel::Action}, kVerbOnly)}},
  };
  whats_adj_verb.per_schema = {
      {"lotus", adj_then_action},
      {"flour", adj_then_action},
      {"lemon", adj_then_action},
  };
  out.push_back(std::move(whats_adj_verb));

  JokeTemplate syn_has;
  syn_has.name = "syn_has";
  syn_has.pattern = {
      PatternPiece::text("What do you call "),
      PatternPiece::fragment(0, SlotStyle::NpDet),
      PatternPiece::text(" that has "),
      PatternPiece::fragment(1, SlotStyle::NpDet),
      PatternPiece::text("?"),
  };
  syn_has.per_schema = {
      {"grail",
       {{0, {"char_orig", fwd({RelationLabel::Synonym, RelationLabel::Class}, kNominal)}},
        {1, {"char_hom", fwd({RelationLabel::MadeOf, RelationLabel::Uses}, kNominal)}}}},
  };
  out.push_back(std::move(syn_has));

  JokeTemplate class_verb;
  class_verb.name = "class_verb";
  class_verb.pattern = {
      PatternPiece::text("What kind of "),
      PatternPiece::fragment(0, SlotStyle::NpBare),
      PatternPiece::text(" can you "),
      PatternPiece::fragment(1, SlotStyle::VerbBase),
      PatternPiece::text("?"),
  };
  class_verb.per_schema = {
      {"lotus",
       {{0, {"char_hom", fwd({RelationLabel::Class}, kNominal)}},
        {1, {"char_orig", fwd({RelationLabel::Action}, kVerbOnly)}}}},
      {"queue",
       {{0, {"char_orig", fwd({RelationLabel::Class}, kNominal)}},
        {1, {"char_hom", fwd({RelationLabel::Action}, kVerbOnly)}}}},
  };
  out.push_back(std::move(class_verb));

  JokeTemplate call_adj_class;
  call_adj_class.name = "call_adj_class";
  call_adj_class.pattern = {
      PatternPiece::text("What do you call "),
      PatternPiece::fused(0, 1),
      PatternPiece::text("?"),
  };
  auto adj_of_hom = std::map<int, SlotBinding>{
      {0, {"char_hom", fwd({RelationLabel::Synonym}, kAdjOnly)}},
      {1, {"char_orig", fwd({RelationLabel::Class}, kNominal)}},
  };
  call_adj_class.per_schema = {
      {"lotus", adj_of_hom},
      {"grail", adj_of_hom},
  };
  out.push_back(std::move(call_adj_class));

  JokeTemplate class_has;
  class_has.name = "class_has";
  class_has.pattern = {
      PatternPiece::text("What kind of "),
      PatternPiece::fragment(0, SlotStyle::NpBare),
      PatternPiece::text(" has "),
      PatternPiece::fragment(1, SlotStyle::NpDet),
      PatternPiece::text("?"),
  };
  class_has.per_schema = {
      {"queue",
       {{0, {"char_kept", fwd({RelationLabel::Class}, kNominal)}},
        {1, {"char_hom", fwd({RelationLabel::MadeOf, RelationLabel::Uses}, kNominal)}}}},
      {"lemon",
       {{0, {"char_orig", fwd({RelationLabel::Class}, kNominal)}},
        {1, {"char_hom", fwd({RelationLabel::MadeOf, RelationLabel::Uses}, kNominal)}}}},
  };
  out.push_back(std::move(class_has));

  return out;
}

}  // namespace

std::string np_fragment(std::string_view id, const Lexicon& lexicon, Position position) {
  const LexicalEntry& entry = entry_or_throw(id, lexicon);
  if (entry.category == WordCategory::Verb)
    throw std::invalid_argument("lexeme " + entry.id + " is a verb, not noun material");
  std::string text;
  if (entry.countable && entry.category != WordCategory::Adjective)
    text = determiner(entry.vowel_start) + " ";
  text += entry.written_form;
  return position == Position::SentenceInitial ? capitalize(std::move(text)) : text;
}

std::string verb_fragment(std::string_view id, const Lexicon& lexicon, VerbMood mood) {
  const LexicalEntry& entry = entry_or_throw(id, lexicon);
  if (entry.category != WordCategory::Verb)
    throw std::invalid_argument("lexeme " + entry.id + " is not a verb");
  std::string third =
      entry.third_person_form ? *entry.third_person_form : entry.written_form + "s";
  switch (mood) {
    case VerbMood::Base:
      return entry.written_form;
    case VerbMood::ThirdPerson:
      return third;
    case VerbMood::RelativeModal:
      return "that can " + entry.written_form;
    case VerbMood::RelativeThird:
      return "that " + third;
  }
  return entry.written_form;
}

PatternPiece PatternPiece::text(std::string value) {
  PatternPiece piece;
  piece.kind = Kind::Literal;
  piece.literal = std::move(value);
  return piece;
}

PatternPiece PatternPiece::fragment(int slot, SlotStyle style) {
  PatternPiece piece;
  piece.kind = Kind::Slot;
  piece.slot = slot;
  piece.style = style;
  return piece;
}

PatternPiece PatternPiece::fused(int adjective_slot, int noun_slot) {
  PatternPiece piece;
  piece.kind = Kind::FusedNp;
  piece.adjective_slot = adjective_slot;
  piece.noun_slot = noun_slot;
  return piece;
}

bool JokeTemplate::compatible_with(std::string_view schema) const {
  return per_schema.find(std::string(schema)) != per_schema.end();
}

std::map<std::string, LinkRequirement> JokeTemplate::requirements_for(
    std::string_view schema) const {
  auto slots = per_schema.find(std::string(schema));
  if (slots == per_schema.end())
    throw std::invalid_argument("template " + name + " does not pair with schema " +
                                std::string(schema));
  std::map<std::string, LinkRequirement> required;
  for (const auto& [slot, binding] : slots->second) required[binding.link] = binding.requirement;
  return required;
}

const std::vector<JokeTemplate>& builtin_templates() {
  static const std::vector<JokeTemplate> catalogue = make_catalogue();
  return catalogue;
}

const JokeTemplate* find_template(std::string_view name) {
  for (const JokeTemplate& tmpl : builtin_templates()) {
    if (tmpl.name == name) return &tmpl;
  }
  return nullptr;
}

JokeTemplate syn_syn_with_variant() { return cross_template("syn_syn_with", " with "); }

RealizedJoke realize(const SchemaInstance& instance, const JokeTemplate& tmpl,
                     const Lexicon& lexicon) {
  auto slots_it = tmpl.per_schema.find(instance.schema);
  if (slots_it == tmpl.per_schema.end())
    throw std::invalid_argument("template " + tmpl.name + " does not pair with schema " +
                                instance.schema);
  const auto& slots = slots_it->second;

  auto slot_value = [&](int slot) -> const std::string& {
    auto binding = slots.find(slot);
    if (binding == slots.end())
      throw std::invalid_argument("template " + tmpl.name + " has no slot " +
                                  std::to_string(slot) + " for schema " + instance.schema);
    auto resolution = instance.resolved.find(binding->second.link);
    if (resolution == instance.resolved.end())
      throw std::invalid_argument("characteristic link " + binding->second.link +
                                  " is unresolved");
    return resolution->second.value;
  };

  std::string question;
  for (const PatternPiece& piece : tmpl.pattern) {
    Position position = question.empty() ? Position::SentenceInitial : Position::Medial;
    switch (piece.kind) {
      case PatternPiece::Kind::Literal:
        question += piece.literal;
        break;
      case PatternPiece::Kind::Slot: {
        const std::string& id = slot_value(piece.slot);
        switch (piece.style) {
          case SlotStyle::NpDet:
            question += np_fragment(id, lexicon, position);
            break;
          case SlotStyle::NpBare:
          case SlotStyle::AdjectiveBare: {
            std::string form = entry_or_throw(id, lexicon).written_form;
            question += position == Position::SentenceInitial ? capitalize(std::move(form))
                                                              : form;
            break;
          }
          case SlotStyle::VerbBase:
            question += verb_fragment(id, lexicon, VerbMood::Base);
            break;
          case SlotStyle::VerbRelativeModal:
            question += verb_fragment(id, lexicon, VerbMood::RelativeModal);
            break;
          case SlotStyle::VerbRelativeThird:
            question += verb_fragment(id, lexicon, VerbMood::RelativeThird);
            break;
          case SlotStyle::VerbThird:
            question += verb_fragment(id, lexicon, VerbMood::ThirdPerson);
            break;
        }
        break;
      }
      case PatternPiece::Kind::FusedNp: {
        const LexicalEntry& adjective = entry_or_throw(slot_value(piece.adjective_slot), lexicon);
        const LexicalEntry& head = entry_or_throw(slot_value(piece.noun_slot), lexicon);
        std::string text;
        if (head.countable) text = determiner(adjective.vowel_start) + " ";
        text += adjective.written_form + " " + head.written_form;
        question +=
            position == Position::SentenceInitial ? capitalize(std::move(text)) : text;
        break;
      }
    }
  }

  // Punchline determiner: a/an agrees with the first surface element, its
  // presence with the countability of the head (the last element).
  std::string surface = construct_surface(instance, lexicon);
  std::vector<std::string> elements = surface_lexemes(instance);
  const LexicalEntry& first = entry_or_throw(elements.front(), lexicon);
  const LexicalEntry& last = entry_or_throw(elements.back(), lexicon);
  std::string answer;
  if (last.countable) answer = determiner(first.vowel_start) + " ";
  answer += surface;
  answer = capitalize(std::move(answer)) + ".";

  RealizedJoke joke;
  joke.question = std::move(question);
  joke.answer = std::move(answer);
  joke.provenance.schema = instance.schema;
  joke.provenance.template_name = tmpl.name;
  joke.provenance.bindings = instance.bindings;
  joke.provenance.labels = instance.resolved;
  const Schema* schema = find_schema(instance.schema);
  if (schema != nullptr && schema->reconstructed) joke.provenance.flags.insert("reconstructed");
  return joke;
}

}  // namespace punnet
