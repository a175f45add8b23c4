#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace folbench::fol {

enum class TermKind { Variable, Constant, Function };

/// A first-order term. Immutable value type.
class Term {
 public:
  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term function(std::string name, std::vector<Term> args);

  TermKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Term>& args() const noexcept { return args_; }

  bool is_variable() const noexcept { return kind_ == TermKind::Variable; }
  bool is_constant() const noexcept { return kind_ == TermKind::Constant; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(TermKind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  TermKind kind_;
  std::string name_;
  std::vector<Term> args_;
};

enum class FormulaKind { Atom, Not, Binary, Quantified };
enum class Connective { And, Or, Implies, Iff };
enum class Quantifier { Forall, Exists };

const char* connective_symbol(Connective c) noexcept;
const char* connective_name(Connective c) noexcept;
const char* quantifier_symbol(Quantifier q) noexcept;
const char* quantifier_name(Quantifier q) noexcept;

/// A first-order formula. Nodes are shared and never mutated, so copies are
/// cheap and a Formula may be read from any number of threads.
class Formula {
 public:
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula negation(Formula operand);
  static Formula binary(Connective op, Formula left, Formula right);
  static Formula quantified(Quantifier q, std::string variable, Formula body);

  static Formula conj(Formula l, Formula r) { return binary(Connective::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return binary(Connective::Or, std::move(l), std::move(r)); }
  static Formula implies(Formula l, Formula r) { return binary(Connective::Implies, std::move(l), std::move(r)); }
  static Formula iff(Formula l, Formula r) { return binary(Connective::Iff, std::move(l), std::move(r)); }
  static Formula forall(std::string v, Formula body) { return quantified(Quantifier::Forall, std::move(v), std::move(body)); }
  static Formula exists(std::string v, Formula body) { return quantified(Quantifier::Exists, std::move(v), std::move(body)); }

  FormulaKind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == FormulaKind::Atom; }
  bool is_not() const noexcept { return kind() == FormulaKind::Not; }
  bool is_binary() const noexcept { return kind() == FormulaKind::Binary; }
  bool is_quantified() const noexcept { return kind() == FormulaKind::Quantified; }
  /// Atom or negated atom.
  bool is_literal() const noexcept;

  // Atom accessors.
  const std::string& predicate() const;
  const std::vector<Term>& args() const;
  // Not accessor.
  const Formula& operand() const;
  // Binary accessors.
  Connective connective() const;
  const Formula& left() const;
  const Formula& right() const;
  // Quantifier accessors.
  Quantifier quantifier() const;
  const std::string& variable() const;
  const Formula& body() const;

  /// Number of nodes (atoms count as one node).
  std::size_t size() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  FormulaKind kind;
  // Atom
  std::string predicate;
  std::vector<Term> args;
  // Binary
  Connective connective = Connective::And;
  // Quantified
  Quantifier quantifier = Quantifier::Forall;
  std::string variable;
  // Not: children[0]; Binary: children[0..1]; Quantified: children[0]
  std::vector<Formula> children;
  std::size_t size = 1;
};

}  // namespace folbench::fol
