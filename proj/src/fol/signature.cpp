#include "folbench/fol/signature.hpp"

#include <regex>

#include "folbench/errors.hpp"

namespace folbench::fol {

void Signature::add_predicate(const std::string& name, std::size_t arity) {
  if (constants_.count(name) || functions_.count(name))
    throw InvalidSignature("predicate '" + name + "' clashes with another symbol");
  auto [it, inserted] = predicates_.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw InvalidSignature("predicate '" + name + "' declared with two arities");
}

void Signature::add_constant(const std::string& name) {
  if (predicates_.count(name) || functions_.count(name))
    throw InvalidSignature("constant '" + name + "' clashes with another symbol");
  constants_.insert(name);
}

void Signature::add_function(const std::string& name, std::size_t arity) {
  if (arity == 0) throw InvalidSignature("function '" + name + "' must have positive arity");
  if (predicates_.count(name) || constants_.count(name))
    throw InvalidSignature("function '" + name + "' clashes with another symbol");
  auto [it, inserted] = functions_.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw InvalidSignature("function '" + name + "' declared with two arities");
}

std::optional<std::size_t> Signature::predicate_arity(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Signature::function_arity(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) return std::nullopt;
  return it->second;
}

bool Signature::declares(const std::string& name) const {
  return predicates_.count(name) || constants_.count(name) || functions_.count(name);
}

Signature Signature::merged_with(const Signature& other) const {
  Signature out = *this;
  for (const auto& [n, a] : other.predicates_) out.add_predicate(n, a);
  for (const auto& c : other.constants_) out.add_constant(c);
  for (const auto& [n, a] : other.functions_) out.add_function(n, a);
  return out;
}

namespace {

void check_template(const std::string& pred, const std::string& text, std::size_t arity) {
  static const std::regex placeholder(R"(\bx(\d+)\b)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), placeholder);
       it != std::sregex_iterator(); ++it) {
    const auto index = std::stoul((*it)[1].str());
    if (index == 0 || index > arity)
      throw InvalidSignature("gloss of '" + pred + "' uses placeholder x" + std::to_string(index) +
                             " beyond arity " + std::to_string(arity));
  }
}

void collect_term(const Term& t, Signature& sig) {
  switch (t.kind()) {
    case TermKind::Variable: break;
    case TermKind::Constant: sig.add_constant(t.name()); break;
    case TermKind::Function:
      sig.add_function(t.name(), t.args().size());
      for (const auto& a : t.args()) collect_term(a, sig);
      break;
  }
}

void collect(const Formula& f, Signature& sig) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      sig.add_predicate(f.predicate(), f.args().size());
      for (const auto& a : f.args()) collect_term(a, sig);
      break;
    case FormulaKind::Not: collect(f.operand(), sig); break;
    case FormulaKind::Binary:
      collect(f.left(), sig);
      collect(f.right(), sig);
      break;
    case FormulaKind::Quantified: collect(f.body(), sig); break;
  }
}

void check_term(const Term& t, const Signature& sig) {
  switch (t.kind()) {
    case TermKind::Variable: break;
    case TermKind::Constant:
      if (!sig.has_constant(t.name())) throw UnknownSymbol(t.name());
      break;
    case TermKind::Function: {
      auto arity = sig.function_arity(t.name());
      if (!arity) throw UnknownSymbol(t.name());
      if (*arity != t.args().size()) throw ArityMismatch(t.name(), *arity, t.args().size());
      for (const auto& a : t.args()) check_term(a, sig);
      break;
    }
  }
}

}  // namespace

void Ontology::validate() const {
  for (const auto& [name, arity] : signature.predicates()) {
    auto it = glossary.predicates.find(name);
    if (it == glossary.predicates.end())
      throw InvalidSignature("predicate '" + name + "' has no gloss");
    check_template(name, it->second.positive, arity);
    check_template(name, it->second.negative, arity);
  }
  for (const auto& [name, gloss] : glossary.predicates)
    if (!signature.predicate_arity(name))
      throw InvalidSignature("gloss for undeclared predicate '" + name + "'");
  for (const auto& c : signature.constants())
    if (!glossary.constants.count(c)) throw InvalidSignature("constant '" + c + "' has no gloss");
  for (const auto& [name, meaning] : glossary.constants)
    if (!signature.has_constant(name))
      throw InvalidSignature("gloss for undeclared constant '" + name + "'");
}

Signature signature_of(const Formula& f) {
  Signature sig;
  collect(f, sig);
  return sig;
}

void check_well_formed(const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto arity = sig.predicate_arity(f.predicate());
      if (!arity) throw UnknownSymbol(f.predicate());
      if (*arity != f.args().size()) throw ArityMismatch(f.predicate(), *arity, f.args().size());
      for (const auto& a : f.args()) check_term(a, sig);
      break;
    }
    case FormulaKind::Not: check_well_formed(f.operand(), sig); break;
    case FormulaKind::Binary:
      check_well_formed(f.left(), sig);
      check_well_formed(f.right(), sig);
      break;
    case FormulaKind::Quantified: check_well_formed(f.body(), sig); break;
  }
}

}  // namespace folbench::fol
