#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "punnet/pipeline.hpp"

namespace py = pybind11;

namespace {

std::map<std::string, std::vector<std::string>> relations_as_strings(
    const punnet::LexicalEntry& entry) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& [label, values] : entry.relations)
    out[std::string(punnet::to_string(label))] = values;
  return out;
}

punnet::RelationLabel label_from_string(const std::string& name) {
  auto label = punnet::parse_relation_label(name);
  if (!label) throw std::invalid_argument("unknown relation label " + name);
  return *label;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "punning riddle generator core";

  py::register_exception<punnet::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<punnet::LexicalEntry>(m, "LexicalEntry")
      .def_readonly("id", &punnet::LexicalEntry::id)
      .def_property_readonly("category",
                             [](const punnet::LexicalEntry& e) {
                               return std::string(punnet::to_string(e.category));
                             })
      .def_readonly("written_form", &punnet::LexicalEntry::written_form)
      .def_readonly("vowel_start", &punnet::LexicalEntry::vowel_start)
      .def_readonly("countable", &punnet::LexicalEntry::countable)
      .def_readonly("constituents", &punnet::LexicalEntry::constituents)
      .def_readonly("third_person_form", &punnet::LexicalEntry::third_person_form)
      .def_property_readonly("relations", &relations_as_strings)
      .def("__repr__", [](const punnet::LexicalEntry& e) {
        return "<LexicalEntry " + e.id + ">";
      });

  py::class_<punnet::Lexicon>(m, "Lexicon")
      .def_static("load", [](std::string_view source) { return punnet::Lexicon::load(source); },
                  py::arg("source"))
      .def("lookup",
           [](const punnet::Lexicon& self, std::string_view id) -> py::object {
             const punnet::LexicalEntry* entry = self.lookup(id);
             return entry == nullptr ? py::none() : py::cast(*entry);
           },
           py::arg("id"))
      .def("relation_values",
           [](const punnet::Lexicon& self, std::string_view id, const std::string& label) {
             return self.relation_values(id, label_from_string(label));
           },
           py::arg("id"), py::arg("label"))
      .def("lexemes_with",
           [](const punnet::Lexicon& self, const std::string& label, std::string_view value) {
             return self.lexemes_with(label_from_string(label), value);
           },
           py::arg("label"), py::arg("value"))
      .def("genuine_noun_phrase", &punnet::Lexicon::genuine_noun_phrase, py::arg("surface"))
      .def("is_lexeme", &punnet::Lexicon::is_lexeme, py::arg("id"))
      .def("serialize", &punnet::Lexicon::serialize)
      .def("__len__", &punnet::Lexicon::size)
      .def("__contains__", &punnet::Lexicon::is_lexeme);

  py::class_<punnet::HomonymBase>(m, "HomonymBase")
      .def_static("load",
                  [](std::string_view source, const punnet::Lexicon& lexicon,
                     bool restrict_to_noun_adj) {
                    return punnet::HomonymBase::load(source, lexicon, restrict_to_noun_adj);
                  },
                  py::arg("source"), py::arg("lexicon"),
                  py::arg("restrict_to_noun_adj") = false)
      .def("homonyms_of",
           [](const punnet::HomonymBase& self, std::string_view id) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const punnet::HomonymPartner& partner : self.homonyms_of(id))
               out.emplace_back(partner.id, std::string(punnet::to_string(partner.kind)));
             return out;
           },
           py::arg("id"))
      .def("serialize", &punnet::HomonymBase::serialize)
      .def("__len__", &punnet::HomonymBase::size);

  py::class_<punnet::CharResolution>(m, "CharResolution")
      .def_property_readonly("label",
                             [](const punnet::CharResolution& r) {
                               return std::string(punnet::to_string(r.label));
                             })
      .def_readonly("value", &punnet::CharResolution::value)
      .def_readonly("inverse", &punnet::CharResolution::inverse);

  py::class_<punnet::Provenance>(m, "Provenance")
      .def_readonly("schema", &punnet::Provenance::schema)
      .def_readonly("template_name", &punnet::Provenance::template_name)
      .def_readonly("bindings", &punnet::Provenance::bindings)
      .def_readonly("labels", &punnet::Provenance::labels)
      .def_readonly("flags", &punnet::Provenance::flags);

  py::class_<punnet::RealizedJoke>(m, "RealizedJoke")
      .def_readonly("question", &punnet::RealizedJoke::question)
      .def_readonly("answer", &punnet::RealizedJoke::answer)
      .def_readonly("provenance", &punnet::RealizedJoke::provenance)
      .def("__repr__", [](const punnet::RealizedJoke& joke) {
        return "<RealizedJoke " + joke.question + " " + joke.answer + ">";
      });

  py::class_<punnet::GenerationConfig>(m, "GenerationConfig")
      .def(py::init<>())
      .def_readwrite("schemata", &punnet::GenerationConfig::schemata)
      .def_readwrite("templates", &punnet::GenerationConfig::templates)
      .def_readwrite("weights", &punnet::GenerationConfig::weights)
      .def_readwrite("max_jokes", &punnet::GenerationConfig::max_jokes)
      .def_readwrite("reconstructed_schemata",
                     &punnet::GenerationConfig::reconstructed_schemata)
      .def_readwrite("seed", &punnet::GenerationConfig::seed)
      .def("weight_for", &punnet::GenerationConfig::weight_for, py::arg("schema"),
           py::arg("template_name"));

  m.def("parse_config",
        [](std::string_view source) { return punnet::parse_config(source); },
        py::arg("source"));
  m.def("generate", &punnet::generate, py::arg("lexicon"), py::arg("homonyms"),
        py::arg("config") = punnet::GenerationConfig{});
  m.def("export_text", &punnet::export_text, py::arg("jokes"));
  m.def("export_records", &punnet::export_records, py::arg("jokes"));
  m.def("parse_records",
        [](std::string_view data) { return punnet::parse_records(data); },
        py::arg("data"));
  m.def("regenerate", &punnet::regenerate, py::arg("provenance"), py::arg("lexicon"),
        py::arg("homonyms"));

  m.def("schema_names", [] {
    std::vector<std::pair<std::string, bool>> out;
    for (const punnet::Schema& schema : punnet::builtin_schemata())
      out.emplace_back(schema.name, schema.reconstructed);
    return out;
  });
  m.def("template_names", [] {
    std::vector<std::string> out;
    for (const punnet::JokeTemplate& tmpl : punnet::builtin_templates())
      out.push_back(tmpl.name);
    return out;
  });
  m.def("describe_schema", [](std::string_view name) {
    const punnet::Schema* schema = punnet::find_schema(name);
    if (schema == nullptr)
      throw std::invalid_argument("unknown schema " + std::string(name));
    return punnet::describe(*schema);
  });
}
