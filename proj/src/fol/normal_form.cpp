#include "folbench/fol/normal_form.hpp"

namespace folbench::fol {
namespace {

Formula nnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return negated ? Formula::negation(f) : f;
    case FormulaKind::Not:
      return nnf(f.operand(), !negated);
    case FormulaKind::Quantified: {
      Quantifier q = f.quantifier();
      if (negated) q = q == Quantifier::Forall ? Quantifier::Exists : Quantifier::Forall;
      return Formula::quantified(q, f.variable(), nnf(f.body(), negated));
    }
    case FormulaKind::Binary:
      break;
  }
  const Formula& a = f.left();
  const Formula& b = f.right();
  switch (f.connective()) {
    case Connective::And:
      return negated ? Formula::disj(nnf(a, true), nnf(b, true))
                     : Formula::conj(nnf(a, false), nnf(b, false));
    case Connective::Or:
      return negated ? Formula::conj(nnf(a, true), nnf(b, true))
                     : Formula::disj(nnf(a, false), nnf(b, false));
    case Connective::Implies:
      // ¬α ∨ β
      return negated ? Formula::conj(nnf(a, false), nnf(b, true))
                     : Formula::disj(nnf(a, true), nnf(b, false));
    case Connective::Iff:
      // (¬α ∨ β) ∧ (¬β ∨ α)
      return negated ? Formula::disj(Formula::conj(nnf(a, false), nnf(b, true)),
                                     Formula::conj(nnf(b, false), nnf(a, true)))
                     : Formula::conj(Formula::disj(nnf(a, true), nnf(b, false)),
                                     Formula::disj(nnf(b, true), nnf(a, false)));
  }
  return f;
}

void collect_term_vars(const Term& t, const std::multiset<std::string>& bound,
                       std::set<std::string>& out) {
  if (t.is_variable()) {
    if (!bound.count(t.name())) out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_term_vars(a, bound, out);
}

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      for (const auto& a : f.args()) collect_term_vars(a, bound, out);
      break;
    case FormulaKind::Not: collect_free(f.operand(), bound, out); break;
    case FormulaKind::Binary:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      break;
    case FormulaKind::Quantified: {
      auto it = bound.insert(f.variable());
      collect_free(f.body(), bound, out);
      bound.erase(it);
      break;
    }
  }
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom: return true;
    case FormulaKind::Not: return f.operand().is_atom();
    case FormulaKind::Quantified: return is_nnf(f.body());
    case FormulaKind::Binary:
      if (f.connective() == Connective::Implies || f.connective() == Connective::Iff) return false;
      return is_nnf(f.left()) && is_nnf(f.right());
  }
  return false;
}

Formula negate(const Formula& f) { return Formula::negation(f); }

std::set<std::string> free_vars(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

bool is_closed(const Formula& f) { return free_vars(f).empty(); }

Formula universal_closure(const Formula& f) {
  const auto frees = free_vars(f);
  Formula out = f;
  for (auto it = frees.rbegin(); it != frees.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

}  // namespace folbench::fol
