#include "folbench/fol/ontology_io.hpp"

#include <fstream>

#include "folbench/errors.hpp"

namespace folbench::fol {

Ontology ontology_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidSignature("ontology must be a JSON object");
  Ontology o;
  try {
    if (j.contains("predicates")) {
      for (const auto& [name, spec] : j.at("predicates").items()) {
        const auto arity = spec.at("arity").get<std::size_t>();
        o.signature.add_predicate(name, arity);
        o.glossary.predicates[name] = {spec.value("positive", std::string{}),
                                       spec.value("negative", std::string{})};
      }
    }
    if (j.contains("constants")) {
      for (const auto& [name, meaning] : j.at("constants").items()) {
        o.signature.add_constant(name);
        o.glossary.constants[name] = meaning.get<std::string>();
      }
    }
    if (j.contains("functions")) {
      for (const auto& [name, arity] : j.at("functions").items())
        o.signature.add_function(name, arity.get<std::size_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSignature(std::string("malformed ontology: ") + e.what());
  }
  o.validate();
  return o;
}

nlohmann::json ontology_to_json(const Ontology& o) {
  nlohmann::json preds = nlohmann::json::object();
  for (const auto& [name, arity] : o.signature.predicates()) {
    const auto& g = o.glossary.predicates.at(name);
    preds[name] = {{"arity", arity}, {"positive", g.positive}, {"negative", g.negative}};
  }
  nlohmann::json consts = nlohmann::json::object();
  for (const auto& [name, meaning] : o.glossary.constants) consts[name] = meaning;
  nlohmann::json out = {{"predicates", preds}, {"constants", consts}};
  if (!o.signature.functions().empty()) {
    nlohmann::json funcs = nlohmann::json::object();
    for (const auto& [name, arity] : o.signature.functions()) funcs[name] = arity;
    out["functions"] = funcs;
  }
  return out;
}

Ontology load_ontology(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSignature("cannot open ontology file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSignature("ontology file " + path.string() + " is not valid JSON: " + e.what());
  }
  return ontology_from_json(j);
}

}  // namespace folbench::fol
