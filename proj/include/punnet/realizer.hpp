#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "punnet/lexicon.hpp"
#include "punnet/schema.hpp"

namespace punnet {

enum class Position { SentenceInitial, Medial };

// Determiner-bearing rendering of a noun, noun phrase, or adjective:
// "a"/"an" by vowel_start when countable, bare otherwise, capitalized only
// sentence-initially. Throws std::invalid_argument for unknown ids or verbs.
std::string np_fragment(std::string_view id, const Lexicon& lexicon, Position position);

enum class VerbMood {
  Base,          // "leap"
  ThirdPerson,   // "leaps" (third_person_form slot, else written form + "s")
  RelativeModal, // "that can leap"
  RelativeThird, // "that leaps"
};

std::string verb_fragment(std::string_view id, const Lexicon& lexicon, VerbMood mood);

enum class SlotStyle {
  NpDet,        // np_fragment with determiner policy
  NpBare,       // written form only ("What kind of line ...")
  AdjectiveBare,
  VerbBase,
  VerbRelativeModal,
  VerbRelativeThird,
  VerbThird,
};

struct PatternPiece {
  enum class Kind { Literal, Slot, FusedNp } kind = Kind::Literal;
  std::string literal;
  int slot = 0;
  SlotStyle style = SlotStyle::NpDet;
  // FusedNp renders "det adjective noun" with the determiner agreeing with
  // the adjective's vowel_start and the head noun's countability.
  int adjective_slot = 0;
  int noun_slot = 0;

  static PatternPiece text(std::string value);
  static PatternPiece fragment(int slot, SlotStyle style);
  static PatternPiece fused(int adjective_slot, int noun_slot);
};

// Ties a template slot to one of a schema's characteristic links.
struct SlotBinding {
  std::string link;
  LinkRequirement requirement;
};

// Canned question text with typed gaps. A template lists, per compatible
// schema, which characteristic link feeds each slot and under which
// relation labels; that map is what drives label resolution.
struct JokeTemplate {
  std::string name;
  std::vector<PatternPiece> pattern;
  std::map<std::string, std::map<int, SlotBinding>> per_schema;

  bool compatible_with(std::string_view schema) const;
  // link name -> requirement, for resolve_characteristics.
  std::map<std::string, LinkRequirement> requirements_for(std::string_view schema) const;
};

const std::vector<JokeTemplate>& builtin_templates();
const JokeTemplate* find_template(std::string_view name);

// Prose variant of syn_syn ("... cross a sheep with a kangaroo?"); not in
// the builtin set, available for callers that prefer that wording.
JokeTemplate syn_syn_with_variant();

struct Provenance {
  std::string schema;
  std::string template_name;
  std::map<std::string, std::string> bindings;
  std::map<std::string, CharResolution> labels;
  std::set<std::string> flags;

  auto operator<=>(const Provenance&) const = default;
};

struct RealizedJoke {
  std::string question; // ends "?"
  std::string answer;   // determiner-bearing noun phrase ending "."
  Provenance provenance;

  auto operator<=>(const RealizedJoke&) const = default;
};

// Renders a fully resolved instance through a compatible template. Throws
// std::invalid_argument when the template does not pair with the instance's
// schema or a required link is unresolved.
RealizedJoke realize(const SchemaInstance& instance, const JokeTemplate& tmpl,
                     const Lexicon& lexicon);

}  // namespace punnet
