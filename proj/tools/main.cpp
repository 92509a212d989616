#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "punnet/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 64;
constexpr int kExitBadData = 65;
constexpr int kExitMissingFile = 66;

struct MissingFile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw MissingFile("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) throw MissingFile("cannot open " + path + " for writing");
  out << content;
  if (!out) throw MissingFile("failed writing " + path);
}

struct LoadedData {
  punnet::Lexicon lexicon;
  punnet::HomonymBase homonyms;
};

LoadedData load_data(const std::string& lexicon_path, const std::string& homonym_path) {
  LoadedData data;
  try {
    data.lexicon = punnet::Lexicon::load(read_file(lexicon_path));
  } catch (const punnet::ParseError& error) {
    throw punnet::ParseError(lexicon_path + ": " + error.what());
  }
  try {
    data.homonyms = punnet::HomonymBase::load(read_file(homonym_path), data.lexicon);
  } catch (const punnet::ParseError& error) {
    throw punnet::ParseError(homonym_path + ": " + error.what());
  }
  return data;
}

struct GenerateArgs {
  std::string lexicon_path;
  std::string homonym_path;
  std::string config_path;
  std::string format = "text";
  std::string output;
  long long max = -1;  // -1 = not given on the command line
  std::vector<std::string> schemata;
  std::vector<std::string> templates;
  bool include_reconstructed = false;
};

int run_generate(const GenerateArgs& args) {
  punnet::GenerationConfig config;
  if (!args.config_path.empty()) {
    try {
      config = punnet::parse_config(read_file(args.config_path));
    } catch (const punnet::ParseError& error) {
      throw punnet::ParseError(args.config_path + ": " + error.what());
    }
  }
  // Command-line selections replace, not extend, the config file's.
  if (!args.schemata.empty())
    config.schemata = {args.schemata.begin(), args.schemata.end()};
  if (!args.templates.empty())
    config.templates = {args.templates.begin(), args.templates.end()};
  if (args.max >= 0) config.max_jokes = static_cast<std::size_t>(args.max);
  if (args.include_reconstructed) config.reconstructed_schemata = true;

  LoadedData data = load_data(args.lexicon_path, args.homonym_path);
  std::vector<punnet::RealizedJoke> jokes =
      punnet::generate(data.lexicon, data.homonyms, config);
  write_output(args.output,
               args.format == "records" ? punnet::export_records(jokes)
                                        : punnet::export_text(jokes));
  return kExitOk;
}

int run_validate(const std::string& lexicon_path, const std::string& homonym_path) {
  LoadedData data = load_data(lexicon_path, homonym_path);
  std::cout << "lexicon: " << data.lexicon.size() << " entries\n";
  std::cout << "homonyms: " << data.homonyms.size() << " pairs\n";
  std::cout << "ok\n";
  return kExitOk;
}

int run_explain(const std::string& lexicon_path, const std::string& homonym_path,
                const std::string& records_path, const std::string& output) {
  LoadedData data = load_data(lexicon_path, homonym_path);
  std::vector<punnet::RealizedJoke> records;
  try {
    records = punnet::parse_records(read_file(records_path));
  } catch (const punnet::ParseError& error) {
    throw punnet::ParseError(records_path + ": " + error.what());
  }

  std::ostringstream out;
  std::size_t index = 0;
  for (const punnet::RealizedJoke& record : records) {
    ++index;
    punnet::RealizedJoke regenerated;
    try {
      regenerated = punnet::regenerate(record.provenance, data.lexicon, data.homonyms);
    } catch (const std::invalid_argument& error) {
      throw punnet::ParseError("record " + std::to_string(index) + ": " + error.what());
    }
    if (regenerated.question != record.question || regenerated.answer != record.answer)
      throw punnet::ParseError("record " + std::to_string(index) +
                               ": stored text does not match its provenance");

    punnet::SchemaInstance instance = punnet::instance_from_provenance(
        record.provenance, data.lexicon, data.homonyms);
    out << "Q: " << record.question << '\n';
    out << "A: " << record.answer << '\n';
    out << "template " << record.provenance.template_name << '\n';
    out << punnet::describe_instance(instance, data.lexicon) << '\n';
  }
  write_output(output, out.str());
  return kExitOk;
}

int run_schemata() {
  for (const punnet::Schema& schema : punnet::builtin_schemata())
    std::cout << punnet::describe(schema) << '\n';
  std::cout << "templates:\n";
  for (const punnet::JokeTemplate& tmpl : punnet::builtin_templates()) {
    std::cout << "  " << tmpl.name << " (";
    bool first = true;
    for (const auto& [schema, slots] : tmpl.per_schema) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << schema;
    }
    std::cout << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"punnet: builds punning riddles from a relation lexicon and homonym base"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "generate riddles");
  generate->add_option("--lexicon", gen.lexicon_path, "lexicon file")->required();
  generate->add_option("--homonyms", gen.homonym_path, "homonym pair file")->required();
  generate->add_option("--config", gen.config_path, "generation config file");
  generate->add_option("--format", gen.format, "output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->default_str("text");
  generate->add_option("--max", gen.max, "keep at most N riddles (0 = all)")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--schema", gen.schemata, "restrict to this schema (repeatable)");
  generate->add_option("--template", gen.templates, "restrict to this template (repeatable)");
  generate->add_flag("--include-reconstructed", gen.include_reconstructed,
                     "also run the reconstructed schemata");
  generate->add_option("-o,--output", gen.output, "write here instead of stdout");

  std::string val_lexicon, val_homonyms;
  CLI::App* validate = app.add_subcommand("validate", "check data files and report sizes");
  validate->add_option("--lexicon", val_lexicon, "lexicon file")->required();
  validate->add_option("--homonyms", val_homonyms, "homonym pair file")->required();

  std::string exp_lexicon, exp_homonyms, exp_records, exp_output;
  CLI::App* explain = app.add_subcommand("explain", "show how recorded riddles were built");
  explain->add_option("--lexicon", exp_lexicon, "lexicon file")->required();
  explain->add_option("--homonyms", exp_homonyms, "homonym pair file")->required();
  explain->add_option("records", exp_records, "record file from generate --format records, - for stdin")
      ->required();
  explain->add_option("-o,--output", exp_output, "write here instead of stdout");

  CLI::App* schemata = app.add_subcommand("schemata", "list schemata and templates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (validate->parsed()) return run_validate(val_lexicon, val_homonyms);
    if (explain->parsed()) return run_explain(exp_lexicon, exp_homonyms, exp_records, exp_output);
    if (schemata->parsed()) return run_schemata();
  } catch (const MissingFile& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitMissingFile;
  } catch (const punnet::ParseError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitBadData;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
