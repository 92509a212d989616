#include <doctest.h>

#include <string>
#include <vector>

#include "punnet/realizer.hpp"
#include "punnet/schema.hpp"
#include "test_util.hpp"

using punnet::CharResolution;
using punnet::JokeTemplate;
using punnet::Lexicon;
using punnet::Position;
using punnet::RealizedJoke;
using punnet::RelationLabel;
using punnet::SchemaInstance;
using punnet::VerbMood;
using punnet::builtin_templates;
using punnet::find_template;
using punnet::np_fragment;
using punnet::realize;
using punnet::verb_fragment;
using testutil::Corpus;
using testutil::load_fixture;
using testutil::load_reference;

namespace {

SchemaInstance noun_modifier_instance() {
  SchemaInstance instance;
  instance.schema = "jumper";
  instance.bindings = {{"original_noun", "jumper_1"},
                       {"homonym_word", "jumper_2"},
                       {"modifier", "woolly"}};
  return instance;
}

}  // namespace

TEST_CASE("catalogue ships nine templates in a fixed order") {
  std::vector<std::string> names;
  for (const JokeTemplate& tmpl : builtin_templates()) names.push_back(tmpl.name);
  CHECK(names == std::vector<std::string>{"syn_syn", "syn_verb", "use_syn",
                                          "class_has_rev", "whats_adj_verb", "syn_has",
                                          "class_verb", "call_adj_class", "class_has"});
  CHECK(find_template("use_syn") != nullptr);
  CHECK(find_template("class_has_rev") != nullptr);
  CHECK(find_template("no_such_template") == nullptr);
}

TEST_CASE("compatibility follows the per-schema slot maps") {
  CHECK(find_template("syn_syn")->compatible_with("jumper"));
  CHECK_FALSE(find_template("syn_syn")->compatible_with("lotus"));
  CHECK(find_template("whats_adj_verb")->compatible_with("lotus"));
  CHECK(find_template("whats_adj_verb")->compatible_with("flour"));
  CHECK(find_template("whats_adj_verb")->compatible_with("lemon"));
  CHECK_FALSE(find_template("whats_adj_verb")->compatible_with("queue"));
  CHECK(find_template("syn_has")->compatible_with("grail"));
  CHECK_THROWS_AS(find_template("syn_has")->requirements_for("jumper"),
                  std::invalid_argument);
}

TEST_CASE("the crossing template renders the attested riddle") {
  Corpus corpus = load_fixture("fixture_a");
  SchemaInstance instance = noun_modifier_instance();
  instance.resolved = {{"char_mod", {RelationLabel::Adjective, "sheep", true}},
                       {"char_hom", {RelationLabel::Class, "kangaroo", true}}};

  RealizedJoke joke = realize(instance, *find_template("syn_syn"), corpus.lexicon);
  CHECK(joke.question == "What do you get when you cross a sheep and a kangaroo?");
  CHECK(joke.answer == "A woolly jumper.");
  CHECK(joke.provenance.schema == "jumper");
  CHECK(joke.provenance.template_name == "syn_syn");
  CHECK(joke.provenance.bindings.at("modifier") == "woolly");
  CHECK(joke.provenance.labels.at("char_mod").value == "sheep");
  CHECK(joke.provenance.flags.empty());
}

TEST_CASE("the relative-clause template renders the attested riddle") {
  Corpus corpus = load_fixture("fixture_a");
  SchemaInstance instance = noun_modifier_instance();
  instance.resolved = {{"char_mod", {RelationLabel::Adjective, "sheep", true}},
                       {"char_hom", {RelationLabel::Action, "leap", false}}};

  RealizedJoke joke = realize(instance, *find_template("syn_verb"), corpus.lexicon);
  CHECK(joke.question == "What do you call a sheep that can leap?");
  CHECK(joke.answer == "A woolly jumper.");
}

TEST_CASE("the adjective-action template renders the attested riddle") {
  Corpus corpus = load_fixture("fixture_b");
  SchemaInstance instance;
  instance.schema = "lotus";
  instance.bindings = {{"original_np", "spring_cabbage"},
                       {"first_word", "spring_1"},
                       {"second_word", "cabbage"},
                       {"homonym_word", "spring_2"}};
  instance.resolved = {{"char_orig", {RelationLabel::Adjective, "green", false}},
                       {"char_hom", {RelationLabel::Action, "bounce", false}}};

  RealizedJoke joke = realize(instance, *find_template("whats_adj_verb"), corpus.lexicon);
  CHECK(joke.question == "What's green and bounces?");
  CHECK(joke.answer == "A spring cabbage.");
  CHECK(joke.provenance.flags.empty());
}

TEST_CASE("the kind-of template renders the attested riddle") {
  Corpus corpus = load_fixture("fixture_b");
  SchemaInstance instance;
  instance.schema = "queue";
  instance.bindings = {{"original_np", "pool_cue"},
                       {"first_word", "pool"},
                       {"second_word", "cue_1"},
                       {"homonym_word", "queue"}};
  instance.resolved = {{"char_hom", {RelationLabel::Class, "line", false}},
                       {"char_kept", {RelationLabel::Uses, "sixteen_balls", false}}};

  RealizedJoke joke = realize(instance, *find_template("class_has_rev"), corpus.lexicon);
  CHECK(joke.question == "What kind of line has sixteen balls?");
  CHECK(joke.answer == "A pool queue.");
  // Reconstructed construction, so the record says so.
  CHECK(joke.provenance.flags.count("reconstructed") == 1);
}

TEST_CASE("noun fragments follow the determiner policy") {
  Lexicon lexicon = load_reference().lexicon;
  CHECK(np_fragment("sheep", lexicon, Position::Medial) == "a sheep");
  CHECK(np_fragment("sheep", lexicon, Position::SentenceInitial) == "A sheep");
  CHECK(np_fragment("aeroplane_hangar", lexicon, Position::Medial) ==
        "an aeroplane hangar");
  CHECK(np_fragment("fur", lexicon, Position::Medial) == "fur");
  CHECK(np_fragment("fur", lexicon, Position::SentenceInitial) == "Fur");
  CHECK(np_fragment("holey", lexicon, Position::Medial) == "holey");
  CHECK_THROWS_AS(np_fragment("leap", lexicon, Position::Medial), std::invalid_argument);
  CHECK_THROWS_AS(np_fragment("no_such_id", lexicon, Position::Medial),
                  std::invalid_argument);
}

TEST_CASE("the determiner policy holds across the whole lexicon") {
  Lexicon lexicon = load_reference().lexicon;
  for (const auto& [id, entry] : lexicon.entries()) {
    if (entry.category == punnet::WordCategory::Verb) continue;
    std::string fragment = np_fragment(id, lexicon, Position::Medial);
    INFO(id, " -> ", fragment);
    bool wants_determiner =
        entry.countable && entry.category != punnet::WordCategory::Adjective;
    if (!wants_determiner) {
      CHECK(fragment == entry.written_form);
    } else if (entry.vowel_start) {
      CHECK(fragment == "an " + entry.written_form);
    } else {
      CHECK(fragment == "a " + entry.written_form);
    }
  }
}

TEST_CASE("verb fragments cover every mood") {
  Lexicon lexicon = load_reference().lexicon;
  CHECK(verb_fragment("leap", lexicon, VerbMood::Base) == "leap");
  CHECK(verb_fragment("leap", lexicon, VerbMood::ThirdPerson) == "leaps");
  CHECK(verb_fragment("leap", lexicon, VerbMood::RelativeModal) == "that can leap");
  CHECK(verb_fragment("bounce", lexicon, VerbMood::RelativeThird) == "that bounces");
  CHECK(verb_fragment("grow", lexicon, VerbMood::Base) == "grow");
  // Irregular third person comes from the explicit slot.
  CHECK(verb_fragment("break_down", lexicon, VerbMood::ThirdPerson) == "breaks down");
  CHECK_THROWS_AS(verb_fragment("sheep", lexicon, VerbMood::Base), std::invalid_argument);
}

TEST_CASE("a bare punchline drops the determiner for uncountable heads") {
  Lexicon lexicon = load_reference().lexicon;
  SchemaInstance instance;
  instance.schema = "flour";
  instance.bindings = {{"original_noun", "flower"}, {"homonym_word", "flour"}};
  instance.resolved = {{"char_orig", {RelationLabel::Adjective, "pretty", false}},
                       {"char_hom", {RelationLabel::Action, "bloom", false}}};
  RealizedJoke joke = realize(instance, *find_template("whats_adj_verb"), lexicon);
  CHECK(joke.question == "What's pretty and blooms?");
  CHECK(joke.answer == "Flour.");
}

TEST_CASE("the fused noun phrase agrees with adjective and head") {
  Lexicon lexicon = load_reference().lexicon;
  SchemaInstance instance;
  instance.schema = "lotus";
  instance.bindings = {{"original_np", "hansom_cab"},
                       {"first_word", "hansom"},
                       {"second_word", "cab"},
                       {"homonym_word", "handsome"}};
  instance.resolved = {{"char_hom", {RelationLabel::Synonym, "good_looking", false}},
                       {"char_orig", {RelationLabel::Class, "taxi", false}}};
  RealizedJoke joke = realize(instance, *find_template("call_adj_class"), lexicon);
  CHECK(joke.question == "What do you call a good-looking taxi?");
  CHECK(joke.answer == "A handsome cab.");
}

TEST_CASE("realization rejects bad pairings and open links") {
  Corpus corpus = load_fixture("fixture_a");
  SchemaInstance instance = noun_modifier_instance();

  // Unresolved links cannot render.
  CHECK_THROWS_AS(realize(instance, *find_template("syn_syn"), corpus.lexicon),
                  std::invalid_argument);
  // The schema has no pairing with this template.
  instance.resolved = {{"char_mod", {RelationLabel::Adjective, "sheep", true}},
                       {"char_hom", {RelationLabel::Class, "kangaroo", true}}};
  CHECK_THROWS_AS(realize(instance, *find_template("use_syn"), corpus.lexicon),
                  std::invalid_argument);
}

TEST_CASE("the prose crossing variant stays out of the builtin set") {
  Corpus corpus = load_fixture("fixture_a");
  JokeTemplate variant = punnet::syn_syn_with_variant();
  CHECK(find_template(variant.name) == nullptr);

  SchemaInstance instance = noun_modifier_instance();
  instance.resolved = {{"char_mod", {RelationLabel::Adjective, "sheep", true}},
                       {"char_hom", {RelationLabel::Class, "kangaroo", true}}};
  RealizedJoke joke = realize(instance, variant, corpus.lexicon);
  CHECK(joke.question == "What do you get when you cross a sheep with a kangaroo?");
  CHECK(joke.answer == "A woolly jumper.");
}
