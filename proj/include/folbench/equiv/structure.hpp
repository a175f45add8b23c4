#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "folbench/fol/formula.hpp"
#include "folbench/fol/signature.hpp"

namespace folbench::equiv {

using Element = std::size_t;
using Tuple = std::vector<Element>;

/// A finite σ-structure over the domain {0, ..., domain_size-1}.
struct SigmaStructure {
  std::size_t domain_size = 1;
  std::map<std::string, Element> constants;
  std::map<std::string, std::set<Tuple>> predicates;
  std::map<std::string, std::map<Tuple, Element>> functions;

  /// Fills every symbol of `sig` missing from the structure with a default
  /// interpretation (element 0, empty relation, constant-0 function).
  void complete_for(const fol::Signature& sig);

  /// Throws std::invalid_argument if the structure does not interpret `sig`.
  void validate(const fol::Signature& sig) const;

  friend bool operator==(const SigmaStructure&, const SigmaStructure&) = default;
};

nlohmann::json structure_to_json(const SigmaStructure& s);
std::string describe_structure(const SigmaStructure& s);

using Assignment = std::map<std::string, Element>;

/// Satisfaction of `f` in `s` under `env`. Quantifiers range over the
/// domain. Free variables of `f` must be bound by `env`.
bool eval(const fol::Formula& f, const SigmaStructure& s, const Assignment& env = {});

Element eval_term(const fol::Term& t, const SigmaStructure& s, const Assignment& env);

}  // namespace folbench::equiv
