#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "punnet/homonym_base.hpp"
#include "punnet/lexicon.hpp"

namespace punnet {

enum class RoleKind {
  BoundLexeme,        // bound to an entry during instantiation
  ConstructedSurface, // the punchline phrase, built from other roles
  Value,              // characteristic value, filled in at template pairing
};

enum class LinkKind {
  Homonym,
  ConstituentFirst,
  ConstituentSecond,
  Characteristic,
  Substitution,
};

struct SchemaRole {
  std::string name;
  RoleKind kind = RoleKind::BoundLexeme;
  // Empty set = any category.
  std::set<WordCategory> categories;
};

struct SchemaLink {
  LinkKind kind = LinkKind::Characteristic;
  std::string from;
  std::string to;
  // Characteristic links carry a name templates refer to.
  std::string name;
  // Non-empty only for schema-intrinsic characteristic constraints, which
  // bind their target role during instantiation. Empty means the label is
  // chosen later, by the template the instance is paired with.
  std::set<RelationLabel> allowed_labels;
  // Homonym links: acceptable pair kinds. Empty = either.
  std::set<HomonymKind> allowed_kinds;
};

// A constraint graph over lexemes. The shipped catalogue has six; the four
// marked reconstructed extend the core pair and stay out of generation
// unless explicitly included.
struct Schema {
  std::string name;
  bool reconstructed = false;
  std::vector<SchemaRole> roles;
  std::vector<SchemaLink> links;
  // Role the search seeds from (the phrase or noun the riddle is built on).
  std::string seed_role;
  // ConstructedSurface role holding the punchline.
  std::string answer_role;
  // BoundLexeme roles whose written forms compose the punchline, in order.
  std::vector<std::string> surface_elements;

  const SchemaRole* role(std::string_view name) const;
  const SchemaLink* characteristic_link(std::string_view name) const;
};

const std::vector<Schema>& builtin_schemata();
const Schema* find_schema(std::string_view name);

// Human-readable catalogue form: roles, links, flags.
std::string describe(const Schema& schema);

// How one characteristic link was settled: value satisfies
// label(anchor) = value (forward) or label(value) = anchor (inverse).
struct CharResolution {
  RelationLabel label = RelationLabel::Synonym;
  std::string value;
  bool inverse = false;

  auto operator<=>(const CharResolution&) const = default;
};

struct SchemaInstance {
  std::string schema;
  // BoundLexeme role -> entry id.
  std::map<std::string, std::string> bindings;
  // Characteristic link name -> resolution; filled by
  // resolve_characteristics, empty straight after instantiation.
  std::map<std::string, CharResolution> resolved;

  auto operator<=>(const SchemaInstance&) const = default;
};

// Deterministic backtracking search for every way of binding the schema's
// roles against the lexicon and homonym base. constraints pre-binds roles
// (unknown role names are rejected with std::invalid_argument). Instances
// come back sorted by their role-binding tuple, duplicate-free, with
// characteristic links still unresolved unless schema-intrinsic.
std::vector<SchemaInstance> instantiate(
    const Schema& schema, const Lexicon& lexicon, const HomonymBase& base,
    const std::map<std::string, std::string>& constraints = {});

// What a template demands of one characteristic link.
struct LinkRequirement {
  std::set<RelationLabel> labels;          // empty = any label
  bool inverse = false;
  std::set<WordCategory> value_categories; // empty = any; values must be lexemes
};

// One instance per combination of (label, value) the lexicon asserts for
// the required links. Requirements naming links the schema lacks are
// rejected with std::invalid_argument.
std::vector<SchemaInstance> resolve_characteristics(
    const SchemaInstance& instance,
    const std::map<std::string, LinkRequirement>& required,
    const Lexicon& lexicon);

// Punchline noun phrase: written forms of the surface element roles joined
// with single spaces, lowercase.
std::string construct_surface(const SchemaInstance& instance, const Lexicon& lexicon);

// Entry ids behind the punchline, in surface order.
std::vector<std::string> surface_lexemes(const SchemaInstance& instance);

// Re-checks every link predicate against the lexicon and base. Used by the
// test oracles and by provenance regeneration.
bool verify_instance(const SchemaInstance& instance, const Lexicon& lexicon,
                     const HomonymBase& base);

// Diagnostic serialization of an instance: bindings, resolutions, surface.
std::string describe_instance(const SchemaInstance& instance, const Lexicon& lexicon);

}  // namespace punnet
