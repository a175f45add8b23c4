#pragma once

#include <filesystem>

#include <json.hpp>

#include "folbench/fol/signature.hpp"

namespace folbench::fol {

// Ontology documents look like
//   {"predicates": {"Cube": {"arity": 1, "positive": "x1 is a cube",
//                            "negative": "x1 is not a cube"}},
//    "constants": {"A": "A"},
//    "functions": {"father": 1}}
// `functions` is optional.

Ontology ontology_from_json(const nlohmann::json& j);
nlohmann::json ontology_to_json(const Ontology& o);
Ontology load_ontology(const std::filesystem::path& path);

}  // namespace folbench::fol
