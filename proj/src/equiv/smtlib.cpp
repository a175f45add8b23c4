#include "folbench/equiv/smtlib.hpp"

#include "folbench/errors.hpp"
#include "folbench/fol/normal_form.hpp"

namespace folbench::equiv {

using fol::Formula;
using fol::FormulaKind;
using fol::Term;
using fol::TermKind;

namespace {

void term_sexpr(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Variable: out += smt_symbol(SmtSymbolKind::Variable, t.name()); return;
    case TermKind::Constant: out += smt_symbol(SmtSymbolKind::Constant, t.name()); return;
    case TermKind::Function:
      out += '(';
      out += smt_symbol(SmtSymbolKind::Function, t.name());
      for (const auto& a : t.args()) {
        out += ' ';
        term_sexpr(a, out);
      }
      out += ')';
      return;
  }
}

void formula_sexpr(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      if (f.args().empty()) {
        out += smt_symbol(SmtSymbolKind::Predicate, f.predicate());
        return;
      }
      out += '(';
      out += smt_symbol(SmtSymbolKind::Predicate, f.predicate());
      for (const auto& a : f.args()) {
        out += ' ';
        term_sexpr(a, out);
      }
      out += ')';
      return;
    case FormulaKind::Not:
      out += "(not ";
      formula_sexpr(f.operand(), out);
      out += ')';
      return;
    case FormulaKind::Binary: {
      const char* op = "and";
      switch (f.connective()) {
        case fol::Connective::And: op = "and"; break;
        case fol::Connective::Or: op = "or"; break;
        case fol::Connective::Implies: op = "=>"; break;
        case fol::Connective::Iff: op = "="; break;
      }
      out += '(';
      out += op;
      out += ' ';
      formula_sexpr(f.left(), out);
      out += ' ';
      formula_sexpr(f.right(), out);
      out += ')';
      return;
    }
    case FormulaKind::Quantified:
      out += f.quantifier() == fol::Quantifier::Forall ? "(forall ((" : "(exists ((";
      out += smt_symbol(SmtSymbolKind::Variable, f.variable());
      out += " U)) ";
      formula_sexpr(f.body(), out);
      out += ')';
      return;
  }
}

std::string sorts(std::size_t arity) {
  std::string s = "(";
  for (std::size_t i = 0; i < arity; ++i) s += i ? " U" : "U";
  return s + ")";
}

}  // namespace

std::string smt_symbol(SmtSymbolKind kind, const std::string& name) {
  switch (kind) {
    case SmtSymbolKind::Predicate: return "p_" + name;
    case SmtSymbolKind::Constant: return "c_" + name;
    case SmtSymbolKind::Function: return "f_" + name;
    case SmtSymbolKind::Variable: return "v_" + name;
  }
  return name;
}

std::optional<std::pair<SmtSymbolKind, std::string>> parse_smt_symbol(const std::string& symbol) {
  if (symbol.size() < 3 || symbol[1] != '_') return std::nullopt;
  const std::string rest = symbol.substr(2);
  switch (symbol[0]) {
    case 'p': return std::make_pair(SmtSymbolKind::Predicate, rest);
    case 'c': return std::make_pair(SmtSymbolKind::Constant, rest);
    case 'f': return std::make_pair(SmtSymbolKind::Function, rest);
    case 'v': return std::make_pair(SmtSymbolKind::Variable, rest);
    default: return std::nullopt;
  }
}

std::string smt_formula(const Formula& f) {
  std::string out;
  formula_sexpr(f, out);
  return out;
}

std::string emit_smtlib(const Formula& f1, const Formula& f2, const fol::Signature& sig) {
  fol::check_well_formed(f1, sig);
  fol::check_well_formed(f2, sig);
  if (!fol::is_closed(f1) || !fol::is_closed(f2))
    throw UnsupportedConstruct("SMT-LIB emission requires closed formulas");

  std::string out;
  out += "; unsat iff the two formulas are equivalent\n";
  out += "(set-option :produce-models true)\n";
  out += "(declare-sort U 0)\n";
  for (const auto& c : sig.constants())
    out += "(declare-fun " + smt_symbol(SmtSymbolKind::Constant, c) + " () U)\n";
  for (const auto& [name, arity] : sig.functions())
    out += "(declare-fun " + smt_symbol(SmtSymbolKind::Function, name) + " " + sorts(arity) +
           " U)\n";
  for (const auto& [name, arity] : sig.predicates())
    out += "(declare-fun " + smt_symbol(SmtSymbolKind::Predicate, name) + " " + sorts(arity) +
           " Bool)\n";
  out += "(assert (not (= " + smt_formula(f1) + " " + smt_formula(f2) + ")))\n";
  out += "(check-sat)\n";
  return out;
}

}  // namespace folbench::equiv
