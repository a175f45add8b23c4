#include "folbench/fol/printer.hpp"

namespace folbench::fol {
namespace {

constexpr int kUnaryPrec = 5;

int precedence(Connective c) {
  switch (c) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
  }
  return 0;
}

bool left_associative(Connective c) { return c == Connective::And || c == Connective::Or; }

void emit(const Formula& f, int required, bool open_right, std::string& out);

void emit_term(const Term& t, std::string& out) {
  out += t.name();
  if (t.kind() == TermKind::Function) {
    out += '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ',';
      emit_term(t.args()[i], out);
    }
    out += ')';
  }
}

void emit(const Formula& f, int required, bool open_right, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += f.predicate();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ',';
          emit_term(f.args()[i], out);
        }
        out += ')';
      }
      return;
    case FormulaKind::Not:
      out += "¬";
      emit(f.operand(), kUnaryPrec, open_right, out);
      return;
    case FormulaKind::Quantified:
      if (!open_right) out += '(';
      out += quantifier_symbol(f.quantifier());
      out += f.variable();
      out += ' ';
      emit(f.body(), 0, true, out);
      if (!open_right) out += ')';
      return;
    case FormulaKind::Binary: {
      const int prec = precedence(f.connective());
      const bool parens = prec < required;
      const bool inner_open = parens || open_right;
      if (parens) out += '(';
      const bool lassoc = left_associative(f.connective());
      emit(f.left(), lassoc ? prec : prec + 1, false, out);
      out += ' ';
      out += connective_symbol(f.connective());
      out += ' ';
      emit(f.right(), lassoc ? prec + 1 : prec, inner_open, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  emit(f, 0, true, out);
  return out;
}

std::string print_term(const Term& t) {
  std::string out;
  emit_term(t, out);
  return out;
}

}  // namespace folbench::fol
