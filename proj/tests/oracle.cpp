#include "oracle.hpp"

#include <algorithm>

namespace oracle {

namespace {

using punnet::HomonymBase;
using punnet::HomonymKind;
using punnet::HomonymPartner;
using punnet::LexicalEntry;
using punnet::Lexicon;
using punnet::RelationLabel;
using punnet::WordCategory;

struct Pick {
  std::string label;
  std::string value;
  bool inverse = false;
};

bool nominal(const Lexicon& lexicon, const std::string& id) {
  const LexicalEntry* e = lexicon.lookup(id);
  return e != nullptr &&
         (e->category == WordCategory::Noun || e->category == WordCategory::NounPhrase);
}

bool has_category(const Lexicon& lexicon, const std::string& id, WordCategory category) {
  const LexicalEntry* e = lexicon.lookup(id);
  return e != nullptr && e->category == category;
}

// Forward picks: values the anchor's own slots assert, kept when they name
// a lexeme passing the category test.
template <typename CategoryOk>
std::vector<Pick> forward(const Lexicon& lexicon, const std::string& anchor,
                          const std::vector<RelationLabel>& labels, CategoryOk ok) {
  std::vector<Pick> picks;
  for (RelationLabel label : labels) {
    for (const std::string& value : lexicon.relation_values(anchor, label)) {
      if (lexicon.is_lexeme(value) && ok(value))
        picks.push_back({std::string(punnet::to_string(label)), value, false});
    }
  }
  return picks;
}

// Inverse picks: lexemes asserting (label, anchor) in their own slots.
template <typename CategoryOk>
std::vector<Pick> inverse(const Lexicon& lexicon, const std::string& anchor,
                          const std::vector<RelationLabel>& labels, CategoryOk ok) {
  std::vector<Pick> picks;
  for (RelationLabel label : labels) {
    for (const std::string& id : lexicon.lexemes_with(label, anchor)) {
      if (ok(id)) picks.push_back({std::string(punnet::to_string(label)), id, true});
    }
  }
  return picks;
}

void emit(std::set<Combination>& out, const std::string& schema, const std::string& tmpl,
          std::map<std::string, std::string> bindings, const std::string& link_a,
          const Pick& a, const std::string& link_b, const Pick& b) {
  Combination combination;
  combination.schema = schema;
  combination.tmpl = tmpl;
  combination.bindings = std::move(bindings);
  combination.labels = {{link_a, a.label, a.value, a.inverse},
                        {link_b, b.label, b.value, b.inverse}};
  std::sort(combination.labels.begin(), combination.labels.end());
  out.insert(std::move(combination));
}

void cross(std::set<Combination>& out, const std::string& schema, const std::string& tmpl,
           const std::map<std::string, std::string>& bindings, const std::string& link_a,
           const std::vector<Pick>& as, const std::string& link_b,
           const std::vector<Pick>& bs) {
  for (const Pick& a : as) {
    for (const Pick& b : bs) emit(out, schema, tmpl, bindings, link_a, a, link_b, b);
  }
}

void enumerate_lotus(std::set<Combination>& out, const Lexicon& lexicon,
                     const HomonymBase& base) {
  auto noun_or_phrase = [&](const std::string& id) { return nominal(lexicon, id); };
  auto adjective = [&](const std::string& id) {
    return has_category(lexicon, id, WordCategory::Adjective);
  };
  auto verb = [&](const std::string& id) {
    return has_category(lexicon, id, WordCategory::Verb);
  };

  for (const auto& [pid, phrase] : lexicon.entries()) {
    if (phrase.category != WordCategory::NounPhrase || !phrase.constituents) continue;
    const std::string& first = phrase.constituents->first;
    const std::string& second = phrase.constituents->second;
    if (!has_category(lexicon, first, WordCategory::Noun)) continue;

    for (const HomonymPartner& partner : base.homonyms_of(first)) {
      const std::string& h = partner.id;
      std::map<std::string, std::string> bindings = {{"original_np", pid},
                                                     {"first_word", first},
                                                     {"second_word", second},
                                                     {"homonym_word", h}};

      cross(out, "lotus", "use_syn", bindings, "char_orig",
            forward(lexicon, pid, {RelationLabel::Action}, verb), "char_hom",
            forward(lexicon, h, {RelationLabel::Synonym}, noun_or_phrase));
      cross(out, "lotus", "class_has_rev", bindings, "char_hom",
            forward(lexicon, h, {RelationLabel::Class}, noun_or_phrase), "char_orig",
            forward(lexicon, pid, {RelationLabel::Uses, RelationLabel::MadeOf},
                    noun_or_phrase));
      cross(out, "lotus", "whats_adj_verb", bindings, "char_orig",
            forward(lexicon, pid, {RelationLabel::Adjective, RelationLabel::SpecifyingAdj},
                    adjective),
            "char_hom", forward(lexicon, h, {RelationLabel::Action}, verb));
      cross(out, "lotus", "class_verb", bindings, "char_hom",
            forward(lexicon, h, {RelationLabel::Class}, noun_or_phrase), "char_orig",
            forward(lexicon, pid, {RelationLabel::Action}, verb));
      cross(out, "lotus", "call_adj_class", bindings, "char_hom",
            forward(lexicon, h, {RelationLabel::Synonym}, adjective), "char_orig",
            forward(lexicon, pid, {RelationLabel::Class}, noun_or_phrase));
    }
  }
}

void enumerate_jumper(std::set<Combination>& out, const Lexicon& lexicon,
                      const HomonymBase& base) {
  auto noun_or_phrase = [&](const std::string& id) { return nominal(lexicon, id); };
  auto verb = [&](const std::string& id) {
    return has_category(lexicon, id, WordCategory::Verb);
  };

  for (const auto& [nid, noun] : lexicon.entries()) {
    if (noun.category != WordCategory::Noun) continue;
    for (const HomonymPartner& partner : base.homonyms_of(nid)) {
      const std::string& h = partner.id;
      for (const std::string& modifier :
           lexicon.relation_values(nid, RelationLabel::SpecifyingAdj)) {
        if (!has_category(lexicon, modifier, WordCategory::Adjective)) continue;
        std::map<std::string, std::string> bindings = {
            {"original_noun", nid}, {"homonym_word", h}, {"modifier", modifier}};

        cross(out, "jumper", "syn_syn", bindings, "char_mod",
              inverse(lexicon, modifier,
                      {RelationLabel::Adjective, RelationLabel::SpecifyingAdj},
                      noun_or_phrase),
              "char_hom",
              inverse(lexicon, h, {RelationLabel::Class, RelationLabel::Synonym},
                      noun_or_phrase));
        cross(out, "jumper", "syn_verb", bindings, "char_mod",
              inverse(lexicon, modifier,
                      {RelationLabel::Adjective, RelationLabel::SpecifyingAdj},
                      noun_or_phrase),
              "char_hom", forward(lexicon, h, {RelationLabel::Action}, verb));
      }
    }
  }
}

void enumerate_queue(std::set<Combination>& out, const Lexicon& lexicon,
                     const HomonymBase& base) {
  auto noun_or_phrase = [&](const std::string& id) { return nominal(lexicon, id); };
  auto verb = [&](const std::string& id) {
    return has_category(lexicon, id, WordCategory::Verb);
  };

  for (const auto& [pid, phrase] : lexicon.entries()) {
    if (phrase.category != WordCategory::NounPhrase || !phrase.constituents) continue;
    const std::string& first = phrase.constituents->first;
    const std::string& second = phrase.constituents->second;
    if (!has_category(lexicon, second, WordCategory::Noun)) continue;

    for (const HomonymPartner& partner : base.homonyms_of(second)) {
      const std::string& h = partner.id;
      std::map<std::string, std::string> bindings = {{"original_np", pid},
                                                     {"first_word", first},
                                                     {"second_word", second},
                                                     {"homonym_word", h}};

      cross(out, "queue", "use_syn", bindings, "char_orig",
            forward(lexicon, pid, {RelationLabel::Action}, verb), "char_hom",
            forward(lexicon, h, {RelationLabel::Synonym}, noun_or_phrase));
      cross(out, "queue", "class_has_rev", bindings, "char_hom",
            forward(lexicon, h, {RelationLabel::Class}, noun_or_phrase), "char_kept",
            forward(lexicon, first, {RelationLabel::Uses, RelationLabel::MadeOf},
                    noun_or_phrase));
      cross(out, "queue", "class_verb", bindings, "char_orig",
            forward(lexicon, pid, {RelationLabel::Class}, noun_or_phrase), "char_hom",
            forward(lexicon, h, {RelationLabel::Action}, verb));
      cross(out, "queue", "class_has", bindings, "char_kept",
            forward(lexicon, first, {RelationLabel::Class}, noun_or_phrase), "char_hom",
            forward(lexicon, h, {RelationLabel::MadeOf, RelationLabel::Uses},
                    noun_or_phrase));
    }
  }
}

void enumerate_grail(std::set<Combination>& out, const Lexicon& lexicon,
                     const HomonymBase& base) {
  auto noun_or_phrase = [&](const std::string& id) { return nominal(lexicon, id); };
  auto adjective = [&](const std::string& id) {
    return has_category(lexicon, id, WordCategory::Adjective);
  };

  for (const auto& [pid, phrase] : lexicon.entries()) {
    if (phrase.category != WordCategory::NounPhrase || !phrase.constituents) continue;
    const std::string& first = phrase.constituents->first;
    const std::string& second = phrase.constituents->second;
    if (!has_category(lexicon, first, WordCategory::Adjective)) continue;

    for (const HomonymPartner& partner : base.homonyms_of(first)) {
      const std::string& h = partner.id;
      std::map<std::string, std::string> bindings = {{"original_np", pid},
                                                     {"first_word", first},
                                                     {"second_word", second},
                                                     {"homonym_word", h}};

      cross(out, "grail", "syn_has", bindings, "char_orig",
            forward(lexicon, pid, {RelationLabel::Synonym, RelationLabel::Class},
                    noun_or_phrase),
            "char_hom",
            forward(lexicon, h, {RelationLabel::MadeOf, RelationLabel::Uses},
                    noun_or_phrase));
      cross(out, "grail", "call_adj_class", bindings, "char_hom",
            forward(lexicon, h, {RelationLabel::Synonym}, adjective), "char_orig",
            forward(lexicon, pid, {RelationLabel::Class}, noun_or_phrase));
    }
  }
}

void enumerate_whole_noun(std::set<Combination>& out, const Lexicon& lexicon,
                          const HomonymBase& base, const std::string& schema,
                          HomonymKind kind) {
  auto noun_or_phrase = [&](const std::string& id) { return nominal(lexicon, id); };
  auto adjective = [&](const std::string& id) {
    return has_category(lexicon, id, WordCategory::Adjective);
  };
  auto verb = [&](const std::string& id) {
    return has_category(lexicon, id, WordCategory::Verb);
  };

  for (const auto& [nid, noun] : lexicon.entries()) {
    if (noun.category != WordCategory::Noun) continue;
    for (const HomonymPartner& partner : base.homonyms_of(nid)) {
      if (partner.kind != kind) continue;
      const std::string& h = partner.id;
      if (!has_category(lexicon, h, WordCategory::Noun)) continue;
      std::map<std::string, std::string> bindings = {{"original_noun", nid},
                                                     {"homonym_word", h}};

      cross(out, schema, "whats_adj_verb", bindings, "char_orig",
            forward(lexicon, nid, {RelationLabel::Adjective, RelationLabel::SpecifyingAdj},
                    adjective),
            "char_hom", forward(lexicon, h, {RelationLabel::Action}, verb));
      if (schema == "lemon") {
        cross(out, schema, "class_has", bindings, "char_orig",
              forward(lexicon, nid, {RelationLabel::Class}, noun_or_phrase), "char_hom",
              forward(lexicon, h, {RelationLabel::MadeOf, RelationLabel::Uses},
                      noun_or_phrase));
      }
    }
  }
}

}  // namespace

std::set<Combination> enumerate_candidates(const Lexicon& lexicon, const HomonymBase& base,
                                           bool include_reconstructed) {
  std::set<Combination> out;
  enumerate_lotus(out, lexicon, base);
  enumerate_jumper(out, lexicon, base);
  if (include_reconstructed) {
    enumerate_queue(out, lexicon, base);
    enumerate_grail(out, lexicon, base);
    enumerate_whole_noun(out, lexicon, base, "flour", HomonymKind::Homophone);
    enumerate_whole_noun(out, lexicon, base, "lemon", HomonymKind::SameSpelling);
  }
  return out;
}

std::vector<std::string> surface_of(const Combination& combination) {
  const auto& b = combination.bindings;
  if (combination.schema == "jumper") return {b.at("modifier"), b.at("original_noun")};
  if (combination.schema == "queue") return {b.at("first_word"), b.at("homonym_word")};
  if (combination.schema == "flour" || combination.schema == "lemon")
    return {b.at("homonym_word")};
  // lotus and grail swap the homonym in for the first word.
  return {b.at("homonym_word"), b.at("second_word")};
}

bool survives_checks(const Combination& combination, const Lexicon& lexicon) {
  std::vector<std::string> surface = surface_of(combination);

  for (const LabelPick& pick : combination.labels) {
    if (std::find(surface.begin(), surface.end(), pick.value) != surface.end())
      return false;  // a question lexeme underlies the punchline
  }

  if (surface.size() == 2) {
    for (const auto& [id, entry] : lexicon.entries()) {
      if (entry.constituents && entry.constituents->first == surface[0] &&
          entry.constituents->second == surface[1])
        return false;  // the punchline rebuilds a listed phrase
    }
  }
  return true;
}

std::set<Combination> enumerate_surviving(const Lexicon& lexicon, const HomonymBase& base,
                                          bool include_reconstructed) {
  std::set<Combination> out;
  for (const Combination& combination :
       enumerate_candidates(lexicon, base, include_reconstructed)) {
    if (survives_checks(combination, lexicon)) out.insert(combination);
  }
  return out;
}

std::set<Combination> from_jokes(const std::vector<punnet::RealizedJoke>& jokes) {
  std::set<Combination> out;
  for (const punnet::RealizedJoke& joke : jokes) {
    Combination combination;
    combination.schema = joke.provenance.schema;
    combination.tmpl = joke.provenance.template_name;
    combination.bindings = joke.provenance.bindings;
    for (const auto& [link, resolution] : joke.provenance.labels) {
      combination.labels.push_back({link, std::string(punnet::to_string(resolution.label)),
                                    resolution.value, resolution.inverse});
    }
    std::sort(combination.labels.begin(), combination.labels.end());
    out.insert(std::move(combination));
  }
  return out;
}

}  // namespace oracle
