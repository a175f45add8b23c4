#include "folbench/fol/formula.hpp"

#include <stdexcept>

namespace folbench::fol {

Term Term::variable(std::string name) { return Term(TermKind::Variable, std::move(name), {}); }

Term Term::constant(std::string name) { return Term(TermKind::Constant, std::move(name), {}); }

Term Term::function(std::string name, std::vector<Term> args) {
  return Term(TermKind::Function, std::move(name), std::move(args));
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                                b.args_.end());
}

const char* connective_symbol(Connective c) noexcept {
  switch (c) {
    case Connective::And: return "∧";
    case Connective::Or: return "∨";
    case Connective::Implies: return "→";
    case Connective::Iff: return "↔";
  }
  return "?";
}

const char* connective_name(Connective c) noexcept {
  switch (c) {
    case Connective::And: return "and";
    case Connective::Or: return "or";
    case Connective::Implies: return "implies";
    case Connective::Iff: return "iff";
  }
  return "?";
}

const char* quantifier_symbol(Quantifier q) noexcept { return q == Quantifier::Forall ? "∀" : "∃"; }

const char* quantifier_name(Quantifier q) noexcept {
  return q == Quantifier::Forall ? "forall" : "exists";
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Atom;
  n->predicate = std::move(predicate);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula operand) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Not;
  n->size = 1 + operand.size();
  n->children.push_back(std::move(operand));
  return Formula(std::move(n));
}

Formula Formula::binary(Connective op, Formula left, Formula right) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Binary;
  n->connective = op;
  n->size = 1 + left.size() + right.size();
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  return Formula(std::move(n));
}

Formula Formula::quantified(Quantifier q, std::string variable, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Quantified;
  n->quantifier = q;
  n->variable = std::move(variable);
  n->size = 1 + body.size();
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_literal() const noexcept {
  return is_atom() || (is_not() && operand().is_atom());
}

namespace {
[[noreturn]] void wrong_kind(const char* accessor) {
  throw std::logic_error(std::string("Formula::") + accessor + " called on wrong node kind");
}
}  // namespace

const std::string& Formula::predicate() const {
  if (!is_atom()) wrong_kind("predicate");
  return node_->predicate;
}

const std::vector<Term>& Formula::args() const {
  if (!is_atom()) wrong_kind("args");
  return node_->args;
}

const Formula& Formula::operand() const {
  if (!is_not()) wrong_kind("operand");
  return node_->children[0];
}

Connective Formula::connective() const {
  if (!is_binary()) wrong_kind("connective");
  return node_->connective;
}

const Formula& Formula::left() const {
  if (!is_binary()) wrong_kind("left");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) wrong_kind("right");
  return node_->children[1];
}

Quantifier Formula::quantifier() const {
  if (!is_quantified()) wrong_kind("quantifier");
  return node_->quantifier;
}

const std::string& Formula::variable() const {
  if (!is_quantified()) wrong_kind("variable");
  return node_->variable;
}

const Formula& Formula::body() const {
  if (!is_quantified()) wrong_kind("body");
  return node_->children[0];
}

std::size_t Formula::size() const noexcept { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case FormulaKind::Atom:
      if (auto c = x.predicate <=> y.predicate; c != 0) return c;
      return std::lexicographical_compare_three_way(x.args.begin(), x.args.end(), y.args.begin(),
                                                    y.args.end());
    case FormulaKind::Not:
      return x.children[0] <=> y.children[0];
    case FormulaKind::Binary:
      if (auto c = x.connective <=> y.connective; c != 0) return c;
      if (auto c = x.children[0] <=> y.children[0]; c != 0) return c;
      return x.children[1] <=> y.children[1];
    case FormulaKind::Quantified:
      if (auto c = x.quantifier <=> y.quantifier; c != 0) return c;
      if (auto c = x.variable <=> y.variable; c != 0) return c;
      return x.children[0] <=> y.children[0];
  }
  return std::strong_ordering::equal;
}

}  // namespace folbench::fol
