#include "folbench/nlgen/translate.hpp"

#include <cctype>

#include "folbench/errors.hpp"

namespace folbench::nlgen {

using fol::Formula;
using fol::FormulaKind;
using fol::Term;

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Renderer {
 public:
  Renderer(const fol::Glossary& g, RenderMode mode) : g_(g), mode_(mode) {}

  std::string term(const Term& t) const {
    switch (t.kind()) {
      case fol::TermKind::Variable: return t.name();
      case fol::TermKind::Constant: {
        const auto it = g_.constants.find(t.name());
        if (it == g_.constants.end()) throw MissingGloss("no meaning for constant '" + t.name() + "'");
        return it->second;
      }
      case fol::TermKind::Function: {
        std::string s = t.name() + "(";
        for (std::size_t i = 0; i < t.args().size(); ++i) {
          if (i) s += ", ";
          s += term(t.args()[i]);
        }
        return s + ")";
      }
    }
    return t.name();
  }

  std::string literal(const Formula& atom, bool positive) const {
    const auto it = g_.predicates.find(atom.predicate());
    if (it == g_.predicates.end())
      throw MissingGloss("no meaning for predicate '" + atom.predicate() + "'");
    std::vector<std::string> args;
    for (const auto& a : atom.args()) args.push_back(term(a));
    return fill_template(positive ? it->second.positive : it->second.negative, args);
  }

  std::string formula(const Formula& f) const {
    switch (f.kind()) {
      case FormulaKind::Atom: return literal(f, true);
      case FormulaKind::Not:
        if (f.operand().is_atom()) return literal(f.operand(), false);
        return "it's false that " + nested(f.operand());
      case FormulaKind::Binary: {
        const auto l = nested(f.left()), r = nested(f.right());
        switch (f.connective()) {
          case fol::Connective::And: return l + " and " + r;
          case fol::Connective::Or: return l + " or " + r;
          case fol::Connective::Implies: return "if " + l + ", then " + r;
          case fol::Connective::Iff: return l + " if and only if " + r;
        }
        break;
      }
      case FormulaKind::Quantified:
        if (f.quantifier() == fol::Quantifier::Exists)
          return "there is " + f.variable() + " such that " + nested(f.body());
        return "for all " + f.variable() + " " + nested(f.body());
    }
    return {};
  }

 private:
  std::string nested(const Formula& f) const {
    if (mode_ == RenderMode::Parenthesized && f.is_binary()) return "(" + formula(f) + ")";
    return formula(f);
  }

  const fol::Glossary& g_;
  RenderMode mode_;
};

std::string normalise(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!out.empty() && out.back() != ' ' && out.back() != '(') out += ' ';
      continue;
    }
    if ((c == ',' || c == '.' || c == ';' || c == ':' || c == '!' || c == '?' || c == ')') &&
        !out.empty() && out.back() == ' ')
      out.pop_back();
    out += c;
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace

std::string fill_template(const std::string& tmpl, const std::vector<std::string>& args) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    const bool boundary = i == 0 || !word_char(tmpl[i - 1]);
    if (boundary && tmpl[i] == 'x' && i + 1 < tmpl.size() &&
        std::isdigit(static_cast<unsigned char>(tmpl[i + 1]))) {
      std::size_t j = i + 1;
      while (j < tmpl.size() && std::isdigit(static_cast<unsigned char>(tmpl[j]))) ++j;
      if (j == tmpl.size() || !word_char(tmpl[j])) {
        const auto idx = std::stoul(tmpl.substr(i + 1, j - i - 1));
        if (idx >= 1 && idx <= args.size()) {
          out += args[idx - 1];
          i = j;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

std::string translate(const Formula& f, const fol::Glossary& g, RenderMode mode) {
  auto s = normalise(Renderer(g, mode).formula(f));
  if (!s.empty() && std::islower(static_cast<unsigned char>(s[0])))
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (s.empty() || s.back() != '.') s += '.';
  return s;
}

}  // namespace folbench::nlgen
