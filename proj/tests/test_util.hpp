#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "punnet/homonym_base.hpp"
#include "punnet/lexicon.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(PUNNET_DATA_DIR) + "/" + name;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(PUNNET_FIXTURE_DIR) + "/" + name;
}

struct Corpus {
  punnet::Lexicon lexicon;
  punnet::HomonymBase homonyms;
};

inline Corpus load_reference() {
  Corpus c;
  c.lexicon = punnet::Lexicon::load(read_file(data_path("reference.lex")));
  c.homonyms =
      punnet::HomonymBase::load(read_file(data_path("reference.hom")), c.lexicon);
  return c;
}

inline Corpus load_fixture(const std::string& stem) {
  Corpus c;
  c.lexicon = punnet::Lexicon::load(read_file(fixture_path(stem + ".lex")));
  c.homonyms =
      punnet::HomonymBase::load(read_file(fixture_path(stem + ".hom")), c.lexicon);
  return c;
}

}  // namespace testutil
