#include "punnet/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "line_format.hpp"

namespace punnet {

namespace {

using detail::split_key_value;
using detail::strip_line;
using detail::tokenize;

const Schema& schema_or_throw(std::string_view name) {
  const Schema* schema = find_schema(name);
  if (schema == nullptr)
    throw std::invalid_argument("unknown schema " + std::string(name));
  return *schema;
}

const JokeTemplate& template_or_throw(std::string_view name) {
  const JokeTemplate* tmpl = find_template(name);
  if (tmpl == nullptr)
    throw std::invalid_argument("unknown template " + std::string(name));
  return *tmpl;
}

// Reconstructed schemata sit out of a default run; naming one explicitly
// opts it in, with or without the include flag.
bool schema_selected(const Schema& schema, const GenerationConfig& config) {
  if (!config.schemata.empty()) return config.schemata.count(schema.name) != 0;
  return !schema.reconstructed || config.reconstructed_schemata;
}

bool template_selected(const JokeTemplate& tmpl, const GenerationConfig& config) {
  return config.templates.empty() || config.templates.count(tmpl.name) != 0;
}

std::size_t parse_count(const std::string& text, std::size_t line) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ParseError("max expects a non-negative integer, got \"" + text + "\"", line);
  return value;
}

double parse_weight(const std::string& text, std::size_t line) {
  double value = 0.0;
  std::size_t consumed = 0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw ParseError("weight expects a number, got \"" + text + "\"", line);
  }
  if (consumed != text.size())
    throw ParseError("weight expects a number, got \"" + text + "\"", line);
  if (value < 0.0 || value > 1.0)
    throw ParseError("weight must lie in [0, 1], got \"" + text + "\"", line);
  return value;
}

bool parse_yes_no(const std::string& text, std::string_view key, std::size_t line) {
  if (text == "yes") return true;
  if (text == "no") return false;
  throw ParseError(std::string(key) + " expects yes or no, got \"" + text + "\"", line);
}

nlohmann::json resolution_to_json(const CharResolution& r) {
  return {{"label", std::string(to_string(r.label))},
          {"value", r.value},
          {"inverse", r.inverse}};
}

CharResolution resolution_from_json(const nlohmann::json& j) {
  CharResolution r;
  auto label = parse_relation_label(j.at("label").get<std::string>());
  if (!label)
    throw nlohmann::json::other_error::create(
        501, "unknown relation label " + j.at("label").get<std::string>(), &j);
  r.label = *label;
  r.value = j.at("value").get<std::string>();
  r.inverse = j.at("inverse").get<bool>();
  return r;
}

}  // namespace

double GenerationConfig::weight_for(std::string_view schema, std::string_view tmpl) const {
  auto it = weights.find({std::string(schema), std::string(tmpl)});
  return it == weights.end() ? 1.0 : it->second;
}

GenerationConfig parse_config(std::string_view source) {
  GenerationConfig config;
  bool saw_max = false;
  bool saw_flag = false;
  bool saw_seed = false;

  std::size_t line_number = 0;
  std::istringstream in{std::string(source)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_number;
    std::string line = strip_line(raw);
    if (line.empty()) continue;

    auto kv = split_key_value(line);
    if (!kv) throw ParseError("expected key = value, got \"" + line + "\"", line_number);
    auto tokens = tokenize(kv->value);
    if (!tokens) throw ParseError("unterminated quote", line_number);

    auto single = [&](std::string_view key) -> const std::string& {
      if (tokens->size() != 1)
        throw ParseError(std::string(key) + " expects a single value", line_number);
      return tokens->front();
    };

    if (kv->key == "max") {
      if (saw_max) throw ParseError("duplicate key max", line_number);
      saw_max = true;
      config.max_jokes = parse_count(single("max"), line_number);
    } else if (kv->key == "include_reconstructed") {
      if (saw_flag) throw ParseError("duplicate key include_reconstructed", line_number);
      saw_flag = true;
      config.reconstructed_schemata =
          parse_yes_no(single("include_reconstructed"), "include_reconstructed", line_number);
    } else if (kv->key == "schema") {
      const std::string& name = single("schema");
      if (find_schema(name) == nullptr)
        throw ParseError("unknown schema \"" + name + "\"", line_number);
      config.schemata.insert(name);
    } else if (kv->key == "template") {
      const std::string& name = single("template");
      if (find_template(name) == nullptr)
        throw ParseError("unknown template \"" + name + "\"", line_number);
      config.templates.insert(name);
    } else if (kv->key == "weight") {
      if (tokens->size() != 3)
        throw ParseError("weight expects: weight = <schema> <template> <value>", line_number);
      const std::string& schema = (*tokens)[0];
      const std::string& tmpl = (*tokens)[1];
      if (find_schema(schema) == nullptr)
        throw ParseError("unknown schema \"" + schema + "\"", line_number);
      if (find_template(tmpl) == nullptr)
        throw ParseError("unknown template \"" + tmpl + "\"", line_number);
      auto key = std::make_pair(schema, tmpl);
      if (config.weights.count(key) != 0)
        throw ParseError("duplicate weight for " + schema + " " + tmpl, line_number);
      config.weights[key] = parse_weight((*tokens)[2], line_number);
    } else if (kv->key == "seed") {
      if (saw_seed) throw ParseError("duplicate key seed", line_number);
      saw_seed = true;
      const std::string& id = single("seed");
      if (!valid_lexeme_id(id))
        throw ParseError("seed expects a lexeme id, got \"" + id + "\"", line_number);
      config.seed = id;
    } else {
      throw ParseError("unknown key \"" + kv->key + "\"", line_number);
    }
  }
  return config;
}

std::string_view to_string(CheckFailure failure) {
  switch (failure) {
    case CheckFailure::IdenticalLexeme:
      return "identical_lexeme";
    case CheckFailure::GenuinePhrase:
      return "genuine_phrase";
  }
  return "unknown";
}

CheckReport post_check(const SchemaInstance& instance, const Lexicon& lexicon) {
  std::vector<std::string> surface = surface_lexemes(instance);

  for (const auto& [link, resolution] : instance.resolved) {
    if (std::find(surface.begin(), surface.end(), resolution.value) != surface.end())
      return {false, CheckFailure::IdenticalLexeme};
  }

  if (surface.size() == 2) {
    for (const auto& [id, entry] : lexicon.entries()) {
      if (entry.constituents && entry.constituents->first == surface[0] &&
          entry.constituents->second == surface[1])
        return {false, CheckFailure::GenuinePhrase};
    }
  }
  return {};
}

CheckReport post_check(const SchemaInstance& instance, const RealizedJoke& joke,
                       const Lexicon& lexicon) {
  (void)joke;  // both checks work on the lexemes behind the text
  return post_check(instance, lexicon);
}

std::vector<RealizedJoke> generate(const Lexicon& lexicon, const HomonymBase& base,
                                   const GenerationConfig& config) {
  for (const std::string& name : config.schemata) schema_or_throw(name);
  for (const std::string& name : config.templates) template_or_throw(name);
  for (const auto& [key, weight] : config.weights) {
    schema_or_throw(key.first);
    template_or_throw(key.second);
    (void)weight;
  }

  std::vector<RealizedJoke> jokes;
  for (const Schema& schema : builtin_schemata()) {
    if (!schema_selected(schema, config)) continue;

    std::map<std::string, std::string> constraints;
    if (config.seed) constraints[schema.seed_role] = *config.seed;
    std::vector<SchemaInstance> instances = instantiate(schema, lexicon, base, constraints);

    for (const JokeTemplate& tmpl : builtin_templates()) {
      if (!template_selected(tmpl, config) || !tmpl.compatible_with(schema.name)) continue;
      auto required = tmpl.requirements_for(schema.name);
      for (const SchemaInstance& instance : instances) {
        for (const SchemaInstance& resolved :
             resolve_characteristics(instance, required, lexicon)) {
          if (!post_check(resolved, lexicon).passed) continue;
          jokes.push_back(realize(resolved, tmpl, lexicon));
        }
      }
    }
  }

  // Dedup on the rendered text, keeping the earliest provenance.
  std::vector<RealizedJoke> unique;
  std::set<std::pair<std::string, std::string>> seen;
  for (RealizedJoke& joke : jokes) {
    if (seen.emplace(joke.question, joke.answer).second) unique.push_back(std::move(joke));
  }

  std::vector<RealizedJoke> ranked = rank(std::move(unique), config);
  if (config.max_jokes != 0 && ranked.size() > config.max_jokes)
    ranked.resize(config.max_jokes);
  return ranked;
}

std::vector<RealizedJoke> rank(std::vector<RealizedJoke> jokes,
                               const GenerationConfig& config) {
  std::vector<RealizedJoke> kept;
  kept.reserve(jokes.size());
  for (RealizedJoke& joke : jokes) {
    if (config.weight_for(joke.provenance.schema, joke.provenance.template_name) > 0.0)
      kept.push_back(std::move(joke));
  }
  std::stable_sort(kept.begin(), kept.end(), [&](const RealizedJoke& x, const RealizedJoke& y) {
    return config.weight_for(x.provenance.schema, x.provenance.template_name) >
           config.weight_for(y.provenance.schema, y.provenance.template_name);
  });
  return kept;
}

std::string export_text(const std::vector<RealizedJoke>& jokes) {
  std::string out;
  for (const RealizedJoke& joke : jokes) {
    out += "Q: " + joke.question + "\n";
    out += "A: " + joke.answer + "\n\n";
  }
  return out;
}

std::string export_records(const std::vector<RealizedJoke>& jokes) {
  std::string out;
  for (const RealizedJoke& joke : jokes) {
    nlohmann::json record;
    record["question"] = joke.question;
    record["answer"] = joke.answer;
    record["schema"] = joke.provenance.schema;
    record["template"] = joke.provenance.template_name;
    record["bindings"] = joke.provenance.bindings;
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [link, resolution] : joke.provenance.labels)
      labels[link] = resolution_to_json(resolution);
    record["labels"] = std::move(labels);
    record["flags"] = joke.provenance.flags;
    out += record.dump();
    out += '\n';
  }
  return out;
}

std::vector<RealizedJoke> parse_records(std::string_view data) {
  std::vector<RealizedJoke> jokes;
  std::istringstream in{std::string(data)};
  std::size_t line_number = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_number;
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
      RealizedJoke joke;
      joke.question = record.at("question").get<std::string>();
      joke.answer = record.at("answer").get<std::string>();
      joke.provenance.schema = record.at("schema").get<std::string>();
      joke.provenance.template_name = record.at("template").get<std::string>();
      joke.provenance.bindings =
          record.at("bindings").get<std::map<std::string, std::string>>();
      for (const auto& [link, value] : record.at("labels").items())
        joke.provenance.labels[link] = resolution_from_json(value);
      joke.provenance.flags = record.at("flags").get<std::set<std::string>>();
      jokes.push_back(std::move(joke));
    } catch (const nlohmann::json::exception& error) {
      throw ParseError(std::string("bad record: ") + error.what(), line_number);
    }
  }
  return jokes;
}

SchemaInstance instance_from_provenance(const Provenance& provenance, const Lexicon& lexicon,
                                        const HomonymBase& base) {
  schema_or_throw(provenance.schema);
  SchemaInstance instance;
  instance.schema = provenance.schema;
  instance.bindings = provenance.bindings;
  instance.resolved = provenance.labels;
  if (!verify_instance(instance, lexicon, base))
    throw std::invalid_argument("provenance does not hold against this lexicon and base");
  return instance;
}

RealizedJoke regenerate(const Provenance& provenance, const Lexicon& lexicon,
                        const HomonymBase& base) {
  SchemaInstance instance = instance_from_provenance(provenance, lexicon, base);
  const JokeTemplate& tmpl = template_or_throw(provenance.template_name);
  return realize(instance, tmpl, lexicon);
}

}  // namespace punnet
