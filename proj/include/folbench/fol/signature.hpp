#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "folbench/fol/formula.hpp"

namespace folbench::fol {

/// Declared vocabulary: predicates and functions with fixed arities, plus
/// constants. The three name sets are pairwise disjoint.
class Signature {
 public:
  void add_predicate(const std::string& name, std::size_t arity);
  void add_constant(const std::string& name);
  void add_function(const std::string& name, std::size_t arity);

  std::optional<std::size_t> predicate_arity(const std::string& name) const;
  std::optional<std::size_t> function_arity(const std::string& name) const;
  bool has_constant(const std::string& name) const { return constants_.count(name) > 0; }
  /// True if `name` is declared in any of the three namespaces.
  bool declares(const std::string& name) const;

  const std::map<std::string, std::size_t>& predicates() const noexcept { return predicates_; }
  const std::set<std::string>& constants() const noexcept { return constants_; }
  const std::map<std::string, std::size_t>& functions() const noexcept { return functions_; }

  /// Union of two signatures. Throws InvalidSignature on a clash.
  Signature merged_with(const Signature& other) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, std::size_t> predicates_;
  std::set<std::string> constants_;
  std::map<std::string, std::size_t> functions_;
};

/// Natural-language meanings for predicates (with x1..xn placeholders) and
/// constants.
struct PredicateGloss {
  std::string positive;
  std::string negative;
  friend bool operator==(const PredicateGloss&, const PredicateGloss&) = default;
};

struct Glossary {
  std::map<std::string, PredicateGloss> predicates;
  std::map<std::string, std::string> constants;
  friend bool operator==(const Glossary&, const Glossary&) = default;
};

struct Ontology {
  Signature signature;
  Glossary glossary;

  /// Checks that the glossary covers exactly the signature's predicates and
  /// constants and that template placeholders fit the arity. Throws
  /// InvalidSignature on violation.
  void validate() const;
  friend bool operator==(const Ontology&, const Ontology&) = default;
};

/// One dataset triple (utterance, closed formula, ontology). The ontology is
/// shared between instances of the same story.
struct Instance {
  std::string id;
  std::string utterance;
  Formula formula;
  std::shared_ptr<const Ontology> ontology;
};

/// Signature holding exactly the symbols that occur in `f`.
Signature signature_of(const Formula& f);

/// Checks `f` against `sig`: all symbols declared with matching arity.
/// Throws UnknownSymbol / ArityMismatch.
void check_well_formed(const Formula& f, const Signature& sig);

}  // namespace folbench::fol
