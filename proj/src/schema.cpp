#include "punnet/schema.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace punnet {

namespace {

SchemaRole bound(std::string name, std::set<WordCategory> categories = {}) {
  return {std::move(name), RoleKind::BoundLexeme, std::move(categories)};
}

SchemaRole value_role(std::string name) { return {std::move(name), RoleKind::Value, {}}; }

SchemaRole surface_role(std::string name) {
  return {std::move(name), RoleKind::ConstructedSurface, {}};
}

SchemaLink constituent(LinkKind kind, std::string from, std::string to) {
  SchemaLink link;
  link.kind = kind;
  link.from = std::move(from);
  link.to = std::move(to);
  return link;
}

SchemaLink homonym(std::string from, std::string to, std::set<HomonymKind> kinds = {}) {
  SchemaLink link;
  link.kind = LinkKind::Homonym;
  link.from = std::move(from);
  link.to = std::move(to);
  link.allowed_kinds = std::move(kinds);
  return link;
}

SchemaLink characteristic(std::string from, std::string to, std::string name,
                          std::set<RelationLabel> labels = {}) {
  SchemaLink link;
  link.kind = LinkKind::Characteristic;
  link.from = std::move(from);
  link.to = std::move(to);
  link.name = std::move(name);
  link.allowed_labels = std::move(labels);
  return link;
}

SchemaLink substitution(std::string from, std::string to) {
  SchemaLink link;
  link.kind = LinkKind::Substitution;
  link.from = std::move(from);
  link.to = std::move(to);
  return link;
}

// First-word substitution in a two-word phrase: the core schema and its
// adjective-first sibling share everything but the first word's category.
Schema phrase_first_word_schema(std::string name, WordCategory first_category,
                                bool reconstructed) {
  Schema s;
  s.name = std::move(name);
  s.reconstructed = reconstructed;
  s.roles = {
      bound("original_np", {WordCategory::NounPhrase}),
      bound("first_word", {first_category}),
      bound("second_word"),
      bound("homonym_word"),
      value_role("char_orig"),
      value_role("char_hom"),
      surface_role("constructed_np"),
  };
  s.links = {
      constituent(LinkKind::ConstituentFirst, "original_np", "first_word"),
      constituent(LinkKind::ConstituentSecond, "original_np", "second_word"),
      homonym("first_word", "homonym_word"),
      characteristic("original_np", "char_orig", "char_orig"),
      characteristic("homonym_word", "char_hom", "char_hom"),
      substitution("original_np", "constructed_np"),
      constituent(LinkKind::ConstituentFirst, "constructed_np", "homonym_word"),
      constituent(LinkKind::ConstituentSecond, "constructed_np", "second_word"),
  };
  s.seed_role = "original_np";
  s.answer_role = "constructed_np";
  s.surface_elements = {"homonym_word", "second_word"};
  return s;
}

// Whole-noun swap with no phrase seed; the homonym kind is what separates
// the two reconstructions built on it.
Schema whole_noun_schema(std::string name, HomonymKind kind) {
  Schema s;
  s.name = std::move(name);
  s.reconstructed = true;
  s.roles = {
      bound("original_noun", {WordCategory::Noun}),
      bound("homonym_word", {WordCategory::Noun}),
      value_role("char_orig"),
      value_role("char_hom"),
      surface_role("constructed_np"),
  };
  s.links = {
      homonym("original_noun", "homonym_word", {kind}),
      characteristic("original_noun", "char_orig", "char_orig"),
      characteristic("homonym_word", "char_hom", "char_hom"),
      substitution("original_noun", "constructed_np"),
      constituent(LinkKind::ConstituentFirst, "constructed_np", "homonym_word"),
  };
  s.seed_role = "original_noun";
  s.answer_role = "constructed_np";
  s.surface_elements = {"homonym_word"};
  return s;
}

std::vector<Schema> make_catalogue() {
  std::vector<Schema> out;

  out.push_back(phrase_first_word_schema("lotus", WordCategory::Noun, false));

  // A real noun plus its specifying adjective; the homonym supplies the
  // second reading. The modifier is fixed by the schema itself, so it binds
  // during instantiation.
  Schema jumper;
  jumper.name = "jumper";
  jumper.roles = {
      bound("original_noun", {WordCategory::Noun}),
      bound("homonym_word"),
      bound("modifier", {WordCategory::Adjective}),
      value_role("char_mod"),
      value_role("char_hom"),
      surface_role("constructed_np"),
  };
  jumper.links = {
      homonym("original_noun", "homonym_word"),
      characteristic("original_noun", "modifier", "modifier",
                     {RelationLabel::SpecifyingAdj}),
      characteristic("modifier", "char_mod", "char_mod"),
      characteristic("homonym_word", "char_hom", "char_hom"),
      substitution("original_noun", "constructed_np"),
      constituent(LinkKind::ConstituentFirst, "constructed_np", "modifier"),
      constituent(LinkKind::ConstituentSecond, "constructed_np", "original_noun"),
  };
  jumper.seed_role = "original_noun";
  jumper.answer_role = "constructed_np";
  jumper.surface_elements = {"modifier", "original_noun"};
  out.push_back(std::move(jumper));

  // Second-word substitution. Characteristics can anchor on the kept first
  // word, the whole phrase, or the homonym; the template picks two.
  Schema queue;
  queue.name = "queue";
  queue.reconstructed = true;
  queue.roles = {
      bound("original_np", {WordCategory::NounPhrase}),
      bound("first_word"),
      bound("second_word", {WordCategory::Noun}),
      bound("homonym_word"),
      value_role("char_kept"),
      value_role("char_orig"),
      value_role("char_hom"),
      surface_role("constructed_np"),
  };
  queue.links = {
      constituent(LinkKind::ConstituentFirst, "original_np", "first_word"),
      constituent(LinkKind::ConstituentSecond, "original_np", "second_word"),
      homonym("second_word", "homonym_word"),
      characteristic("first_word", "char_kept", "char_kept"),
      characteristic("original_np", "char_orig", "char_orig"),
      characteristic("homonym_word", "char_hom", "char_hom"),
      substitution("original_np", "constructed_np"),
      constituent(LinkKind::ConstituentFirst, "constructed_np", "first_word"),
      constituent(LinkKind::ConstituentSecond, "constructed_np", "homonym_word"),
  };
  queue.seed_role = "original_np";
  queue.answer_role = "constructed_np";
  queue.surface_elements = {"first_word", "homonym_word"};
  out.push_back(std::move(queue));

  out.push_back(phrase_first_word_schema("grail", WordCategory::Adjective, true));
  out.push_back(whole_noun_schema("flour", HomonymKind::Homophone));
  out.push_back(whole_noun_schema("lemon", HomonymKind::SameSpelling));
  return out;
}

bool category_allowed(const SchemaRole& role, const LexicalEntry& entry) {
  return role.categories.empty() || role.categories.count(entry.category) != 0;
}

// Candidates for one role, derived from links whose source is already
// bound. No link constrains the seed role, so it ranges over the whole
// lexicon (filtered by category).
std::vector<std::string> role_candidates(
    const Schema& schema, const SchemaRole& role, const Lexicon& lexicon,
    const HomonymBase& base, const std::map<std::string, std::string>& bindings) {
  std::optional<std::set<std::string>> narrowed;
  auto restrict = [&](const std::set<std::string>& ids) {
    if (!narrowed) {
      narrowed = ids;
      return;
    }
    std::set<std::string> kept;
    std::set_intersection(narrowed->begin(), narrowed->end(), ids.begin(), ids.end(),
                          std::inserter(kept, kept.begin()));
    narrowed = std::move(kept);
  };

  for (const SchemaLink& link : schema.links) {
    if (link.to != role.name) continue;
    auto from = bindings.find(link.from);
    if (from == bindings.end()) continue;
    const LexicalEntry* anchor = lexicon.lookup(from->second);
    if (anchor == nullptr) return {};

    switch (link.kind) {
      case LinkKind::ConstituentFirst:
        restrict(anchor->constituents ? std::set<std::string>{anchor->constituents->first}
                                      : std::set<std::string>{});
        break;
      case LinkKind::ConstituentSecond:
        restrict(anchor->constituents
                     ? std::set<std::string>{anchor->constituents->second}
                     : std::set<std::string>{});
        break;
      case LinkKind::Homonym: {
        std::set<std::string> partners;
        for (const HomonymPartner& partner : base.homonyms_of(anchor->id)) {
          if (link.allowed_kinds.empty() || link.allowed_kinds.count(partner.kind))
            partners.insert(partner.id);
        }
        restrict(partners);
        break;
      }
      case LinkKind::Characteristic: {
        if (link.allowed_labels.empty()) break;  // template-resolved later
        std::set<std::string> values;
        for (RelationLabel label : link.allowed_labels) {
          for (const std::string& value : lexicon.relation_values(anchor->id, label)) {
            if (lexicon.is_lexeme(value)) values.insert(value);
          }
        }
        restrict(values);
        break;
      }
      case LinkKind::Substitution:
        break;
    }
  }

  std::vector<std::string> out;
  if (narrowed) {
    for (const std::string& id : *narrowed) {
      const LexicalEntry* entry = lexicon.lookup(id);
      if (entry != nullptr && category_allowed(role, *entry)) out.push_back(id);
    }
  } else {
    for (const auto& [id, entry] : lexicon.entries()) {
      if (category_allowed(role, entry)) out.push_back(id);
    }
  }
  return out;  // map/set iteration keeps this sorted
}

void search(const Schema& schema, const Lexicon& lexicon, const HomonymBase& base,
            const std::map<std::string, std::string>& constraints, std::size_t role_index,
            std::map<std::string, std::string>& bindings,
            std::vector<SchemaInstance>& out) {
  while (role_index < schema.roles.size() &&
         schema.roles[role_index].kind != RoleKind::BoundLexeme)
    ++role_index;
  if (role_index == schema.roles.size()) {
    SchemaInstance instance;
    instance.schema = schema.name;
    instance.bindings = bindings;
    out.push_back(std::move(instance));
    return;
  }

  const SchemaRole& role = schema.roles[role_index];
  auto pinned = constraints.find(role.name);
  for (const std::string& id : role_candidates(schema, role, lexicon, base, bindings)) {
    if (pinned != constraints.end() && pinned->second != id) continue;
    bindings[role.name] = id;
    search(schema, lexicon, base, constraints, role_index + 1, bindings, out);
    bindings.erase(role.name);
  }
}

std::vector<std::string> binding_tuple(const Schema& schema, const SchemaInstance& instance) {
  std::vector<std::string> tuple;
  for (const SchemaRole& role : schema.roles) {
    if (role.kind != RoleKind::BoundLexeme) continue;
    auto it = instance.bindings.find(role.name);
    tuple.push_back(it == instance.bindings.end() ? std::string() : it->second);
  }
  return tuple;
}

}  // namespace

const SchemaRole* Schema::role(std::string_view name) const {
  for (const SchemaRole& r : roles) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const SchemaLink* Schema::characteristic_link(std::string_view name) const {
  for (const SchemaLink& link : links) {
    if (link.kind == LinkKind::Characteristic && link.name == name) return &link;
  }
  return nullptr;
}

const std::vector<Schema>& builtin_schemata() {
  static const std::vector<Schema> catalogue = make_catalogue();
  return catalogue;
}

const Schema* find_schema(std::string_view name) {
  for (const Schema& schema : builtin_schemata()) {
    if (schema.name == name) return &schema;
  }
  return nullptr;
}

std::vector<SchemaInstance> instantiate(const Schema& schema, const Lexicon& lexicon,
                                        const HomonymBase& base,
                                        const std::map<std::string, std::string>& constraints) {
  for (const auto& [role_name, id] : constraints) {
    const SchemaRole* role = schema.role(role_name);
    if (role == nullptr)
      throw std::invalid_argument("schema " + schema.name + " has no role " + role_name);
    if (role->kind != RoleKind::BoundLexeme)
      throw std::invalid_argument("role " + role_name + " of schema " + schema.name +
                                  " is not bindable");
    (void)id;
  }

  std::vector<SchemaInstance> out;
  std::map<std::string, std::string> bindings;
  search(schema, lexicon, base, constraints, 0, bindings, out);

  std::sort(out.begin(), out.end(), [&](const SchemaInstance& x, const SchemaInstance& y) {
    return binding_tuple(schema, x) < binding_tuple(schema, y);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SchemaInstance> resolve_characteristics(
    const SchemaInstance& instance, const std::map<std::string, LinkRequirement>& required,
    const Lexicon& lexicon) {
  const Schema* schema = find_schema(instance.schema);
  if (schema == nullptr)
    throw std::invalid_argument("unknown schema " + instance.schema);
  for (const auto& [name, req] : required) {
    if (schema->characteristic_link(name) == nullptr)
      throw std::invalid_argument("schema " + instance.schema +
                                  " has no characteristic link " + name);
    (void)req;
  }

  // Options per link, in the schema's declared link order.
  std::vector<std::pair<std::string, std::vector<CharResolution>>> per_link;
  for (const SchemaLink& link : schema->links) {
    if (link.kind != LinkKind::Characteristic) continue;
    auto req = required.find(link.name);
    if (req == required.end()) continue;

    auto anchor_binding = instance.bindings.find(link.from);
    if (anchor_binding == instance.bindings.end())
      throw std::invalid_argument("characteristic link " + link.name +
                                  " anchors on unbound role " + link.from);
    const std::string& anchor = anchor_binding->second;

    auto value_fits = [&](const std::string& id) {
      const LexicalEntry* entry = lexicon.lookup(id);
      if (entry == nullptr) return false;
      return req->second.value_categories.empty() ||
             req->second.value_categories.count(entry->category) != 0;
    };

    std::vector<CharResolution> options;
    const std::set<RelationLabel>* labels = &req->second.labels;
    std::set<RelationLabel> every_label;
    if (labels->empty()) {
      every_label.insert(all_relation_labels().begin(), all_relation_labels().end());
      labels = &every_label;
    }
    for (RelationLabel label : *labels) {
      if (!req->second.inverse) {
        for (const std::string& value : lexicon.relation_values(anchor, label)) {
          if (lexicon.is_lexeme(value) && value_fits(value))
            options.push_back({label, value, false});
        }
      } else {
        for (const std::string& id : lexicon.lexemes_with(label, anchor)) {
          if (value_fits(id)) options.push_back({label, id, true});
        }
      }
    }
    if (options.empty()) return {};
    per_link.emplace_back(link.name, std::move(options));
  }

  std::vector<SchemaInstance> out;
  std::vector<std::size_t> pick(per_link.size(), 0);
  while (true) {
    SchemaInstance resolved = instance;
    for (std::size_t i = 0; i < per_link.size(); ++i)
      resolved.resolved[per_link[i].first] = per_link[i].second[pick[i]];
    out.push_back(std::move(resolved));

    std::size_t level = per_link.size();
    while (level > 0) {
      --level;
      if (++pick[level] < per_link[level].second.size()) break;
      pick[level] = 0;
      if (level == 0) return out;
    }
    if (per_link.empty()) return out;
  }
}

std::string construct_surface(const SchemaInstance& instance, const Lexicon& lexicon) {
  const Schema* schema = find_schema(instance.schema);
  if (schema == nullptr)
    throw std::invalid_argument("unknown schema " + instance.schema);
  std::string joined;
  for (const std::string& role : schema->surface_elements) {
    auto binding = instance.bindings.find(role);
    if (binding == instance.bindings.end())
      throw std::invalid_argument("surface role " + role + " is unbound");
    const LexicalEntry* entry = lexicon.lookup(binding->second);
    if (entry == nullptr)
      throw std::invalid_argument("surface role " + role + " binds unknown lexeme " +
                                  binding->second);
    if (!joined.empty()) joined += ' ';
    joined += entry->written_form;
  }
  return normalize_surface(joined);
}

std::vector<std::string> surface_lexemes(const SchemaInstance& instance) {
  const Schema* schema = find_schema(instance.schema);
  if (schema == nullptr)
    throw std::invalid_argument("unknown schema " + instance.schema);
  std::vector<std::string> out;
  for (const std::string& role : schema->surface_elements)
    out.push_back(instance.bindings.at(role));
  return out;
}

bool verify_instance(const SchemaInstance& instance, const Lexicon& lexicon,
                     const HomonymBase& base) {
  const Schema* schema = find_schema(instance.schema);
  if (schema == nullptr) return false;

  for (const SchemaRole& role : schema->roles) {
    if (role.kind != RoleKind::BoundLexeme) continue;
    auto binding = instance.bindings.find(role.name);
    if (binding == instance.bindings.end()) return false;
    const LexicalEntry* entry = lexicon.lookup(binding->second);
    if (entry == nullptr || !category_allowed(role, *entry)) return false;
  }

  auto bound_id = [&](const std::string& role) -> const std::string* {
    auto it = instance.bindings.find(role);
    return it == instance.bindings.end() ? nullptr : &it->second;
  };

  for (const SchemaLink& link : schema->links) {
    const std::string* from = bound_id(link.from);
    const std::string* to = bound_id(link.to);
    switch (link.kind) {
      case LinkKind::ConstituentFirst:
      case LinkKind::ConstituentSecond: {
        if (from == nullptr || to == nullptr) break;  // constructed-surface side
        const LexicalEntry* phrase = lexicon.lookup(*from);
        if (phrase == nullptr || !phrase->constituents) return false;
        const std::string& expected = link.kind == LinkKind::ConstituentFirst
                                          ? phrase->constituents->first
                                          : phrase->constituents->second;
        if (expected != *to) return false;
        break;
      }
      case LinkKind::Homonym: {
        if (from == nullptr || to == nullptr) return false;
        if (*from == *to) return false;
        bool found = false;
        for (const HomonymPartner& partner : base.homonyms_of(*from)) {
          if (partner.id == *to &&
              (link.allowed_kinds.empty() || link.allowed_kinds.count(partner.kind)))
            found = true;
        }
        if (!found) return false;
        break;
      }
      case LinkKind::Characteristic: {
        if (from == nullptr) return false;
        if (!link.allowed_labels.empty()) {
          // Intrinsic: target is a bound role whose value the labels assert.
          if (to == nullptr) return false;
          bool asserted = false;
          for (RelationLabel label : link.allowed_labels) {
            const auto& values = lexicon.relation_values(*from, label);
            if (std::find(values.begin(), values.end(), *to) != values.end())
              asserted = true;
          }
          if (!asserted) return false;
          break;
        }
        auto resolution = instance.resolved.find(link.name);
        if (resolution == instance.resolved.end()) break;  // legitimately open
        const CharResolution& r = resolution->second;
        const std::string& subject = r.inverse ? r.value : *from;
        const std::string& object = r.inverse ? *from : r.value;
        if (lexicon.lookup(subject) == nullptr) return false;
        const auto& values = lexicon.relation_values(subject, r.label);
        if (std::find(values.begin(), values.end(), object) == values.end()) return false;
        break;
      }
      case LinkKind::Substitution:
        break;
    }
  }
  return true;
}

std::string describe(const Schema& schema) {
  std::ostringstream out;
  out << "schema " << schema.name << (schema.reconstructed ? " [reconstructed]" : " [core]")
      << '\n';
  for (const SchemaRole& role : schema.roles) {
    out << "  role " << role.name;
    switch (role.kind) {
      case RoleKind::BoundLexeme:
        out << " : bound";
        break;
      case RoleKind::Value:
        out << " : characteristic value";
        break;
      case RoleKind::ConstructedSurface:
        out << " : constructed surface";
        break;
    }
    if (!role.categories.empty()) {
      out << " (";
      bool first = true;
      for (WordCategory c : role.categories) {
        if (!first) out << ", ";
        first = false;
        out << to_string(c);
      }
      out << ")";
    }
    out << '\n';
  }
  for (const SchemaLink& link : schema.links) {
    out << "  link ";
    switch (link.kind) {
      case LinkKind::Homonym:
        out << "homonym " << link.from << " ~ " << link.to;
        if (!link.allowed_kinds.empty()) {
          out << " (";
          bool first = true;
          for (HomonymKind kind : link.allowed_kinds) {
            if (!first) out << ", ";
            first = false;
            out << to_string(kind);
          }
          out << ")";
        }
        break;
      case LinkKind::ConstituentFirst:
        out << "constituent_first " << link.from << " -> " << link.to;
        break;
      case LinkKind::ConstituentSecond:
        out << "constituent_second " << link.from << " -> " << link.to;
        break;
      case LinkKind::Characteristic: {
        out << "characteristic " << link.name << ": " << link.from << " -> " << link.to;
        if (link.allowed_labels.empty()) {
          out << " (label open)";
        } else {
          out << " (";
          bool first = true;
          for (RelationLabel label : link.allowed_labels) {
            if (!first) out << ", ";
            first = false;
            out << to_string(label);
          }
          out << ")";
        }
        break;
      }
      case LinkKind::Substitution:
        out << "substitution " << link.from << " -> " << link.to;
        break;
    }
    out << '\n';
  }
  out << "  answer role: " << schema.answer_role << '\n';
  return out.str();
}

std::string describe_instance(const SchemaInstance& instance, const Lexicon& lexicon) {
  const Schema* schema = find_schema(instance.schema);
  if (schema == nullptr)
    throw std::invalid_argument("unknown schema " + instance.schema);
  std::ostringstream out;
  out << "schema " << schema->name << (schema->reconstructed ? " [reconstructed]" : "")
      << '\n';
  for (const SchemaRole& role : schema->roles) {
    if (role.kind != RoleKind::BoundLexeme) continue;
    auto binding = instance.bindings.find(role.name);
    if (binding == instance.bindings.end()) continue;
    out << "  " << role.name << " = " << binding->second;
    if (const LexicalEntry* entry = lexicon.lookup(binding->second))
      out << " \"" << entry->written_form << "\"";
    out << '\n';
  }
  for (const SchemaLink& link : schema->links) {
    if (link.kind != LinkKind::Characteristic || link.allowed_labels.empty()) continue;
    auto binding = instance.bindings.find(link.to);
    if (binding == instance.bindings.end()) continue;
    out << "  " << link.name << ": " << to_string(*link.allowed_labels.begin()) << "("
        << instance.bindings.at(link.from) << ") = " << binding->second << '\n';
  }
  for (const SchemaLink& link : schema->links) {
    if (link.kind != LinkKind::Characteristic) continue;
    auto resolution = instance.resolved.find(link.name);
    if (resolution == instance.resolved.end()) continue;
    const CharResolution& r = resolution->second;
    const std::string& anchor = instance.bindings.at(link.from);
    if (r.inverse) {
      out << "  " << link.name << ": " << to_string(r.label) << "(" << r.value
          << ") = " << anchor << " [inverse]\n";
    } else {
      out << "  " << link.name << ": " << to_string(r.label) << "(" << anchor
          << ") = " << r.value << '\n';
    }
  }
  out << "  surface: \"" << construct_surface(instance, lexicon) << "\"\n";
  return out.str();
}

}  // namespace punnet
