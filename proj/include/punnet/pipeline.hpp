#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "punnet/homonym_base.hpp"
#include "punnet/lexicon.hpp"
#include "punnet/realizer.hpp"
#include "punnet/schema.hpp"

namespace punnet {

struct GenerationConfig {
  // Empty = every schema / template. Names must exist in the catalogues.
  std::set<std::string> schemata;
  std::set<std::string> templates;
  // (schema, template) -> weight in [0, 1]; missing pairs weigh 1.0 and
  // weight 0 removes the pair's jokes entirely.
  std::map<std::pair<std::string, std::string>, double> weights;
  // 0 = unbounded. Applied after ranking.
  std::size_t max_jokes = 0;
  bool reconstructed_schemata = false;
  // Optional lexeme the riddle search is seeded from.
  std::optional<std::string> seed;

  double weight_for(std::string_view schema, std::string_view tmpl) const;
};

// Parses the key = value config format (see README); validates names,
// weight ranges, and flag syntax. Throws ParseError.
GenerationConfig parse_config(std::string_view source);

enum class CheckFailure { IdenticalLexeme, GenuinePhrase };

struct CheckReport {
  bool passed = true;
  std::optional<CheckFailure> failure;
};

std::string_view to_string(CheckFailure failure);

// Post-production checks on a fully resolved instance:
//   identical_lexeme — a lexeme feeding a question slot also underlies the
//                      punchline;
//   genuine_phrase   — the punchline's ordered lexeme pair builds a noun
//                      phrase the lexicon already lists.
// Homonym partners are distinct lexemes, so sound-alike overlap passes;
// only identity fails.
CheckReport post_check(const SchemaInstance& instance, const Lexicon& lexicon);
// Same checks, stated over the realized joke they protect.
CheckReport post_check(const SchemaInstance& instance, const RealizedJoke& joke,
                       const Lexicon& lexicon);

// Every checked, deduplicated joke the lexicon and base support under the
// config: schemata x compatible templates x label resolutions, post-checked,
// deduplicated on (question, answer), ranked, truncated to max_jokes.
// Identical inputs always produce byte-identical output.
std::vector<RealizedJoke> generate(const Lexicon& lexicon, const HomonymBase& base,
                                   const GenerationConfig& config = {});

// Stable order by descending weight; weight-0 jokes are dropped; ties keep
// their relative (provenance) order. Does not truncate.
std::vector<RealizedJoke> rank(std::vector<RealizedJoke> jokes,
                               const GenerationConfig& config);

// "Q: ...\nA: ...\n\n" per joke.
std::string export_text(const std::vector<RealizedJoke>& jokes);

// One JSON record per line: question, answer, schema, template, bindings,
// labels, flags. parse_records inverts it exactly.
std::string export_records(const std::vector<RealizedJoke>& jokes);
std::vector<RealizedJoke> parse_records(std::string_view data);

// Rebuilds the schema instance a record describes, re-verifying every link
// against the given lexicon and base. Throws std::invalid_argument when the
// provenance does not hold.
SchemaInstance instance_from_provenance(const Provenance& provenance,
                                        const Lexicon& lexicon,
                                        const HomonymBase& base);

// Regenerates the joke text from provenance alone; equals the original
// realization for any record this pipeline exported.
RealizedJoke regenerate(const Provenance& provenance, const Lexicon& lexicon,
                        const HomonymBase& base);

}  // namespace punnet
