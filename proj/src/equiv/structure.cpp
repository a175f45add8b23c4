#include "folbench/equiv/structure.hpp"

#include <sstream>
#include <stdexcept>

namespace folbench::equiv {

using fol::Formula;
using fol::FormulaKind;
using fol::Term;
using fol::TermKind;

namespace {

void for_each_tuple(std::size_t n, std::size_t arity, const auto& fn) {
  Tuple t(arity, 0);
  for (;;) {
    fn(t);
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (arity == 0) return;
  }
}

std::string element_name(Element e) { return "e" + std::to_string(e); }

}  // namespace

void SigmaStructure::complete_for(const fol::Signature& sig) {
  for (const auto& c : sig.constants()) constants.try_emplace(c, 0);
  for (const auto& [p, arity] : sig.predicates()) predicates.try_emplace(p);
  for (const auto& [f, arity] : sig.functions()) {
    auto [it, inserted] = functions.try_emplace(f);
    if (inserted) for_each_tuple(domain_size, arity, [&](const Tuple& t) { it->second[t] = 0; });
  }
}

void SigmaStructure::validate(const fol::Signature& sig) const {
  if (domain_size == 0) throw std::invalid_argument("structure domain must be non-empty");
  for (const auto& c : sig.constants()) {
    auto it = constants.find(c);
    if (it == constants.end()) throw std::invalid_argument("constant '" + c + "' uninterpreted");
    if (it->second >= domain_size) throw std::invalid_argument("constant '" + c + "' out of domain");
  }
  for (const auto& [p, arity] : sig.predicates()) {
    auto it = predicates.find(p);
    if (it == predicates.end()) continue;  // absent relation reads as empty
    for (const auto& t : it->second) {
      if (t.size() != arity) throw std::invalid_argument("tuple arity mismatch for '" + p + "'");
      for (auto e : t)
        if (e >= domain_size) throw std::invalid_argument("tuple of '" + p + "' out of domain");
    }
  }
  for (const auto& [f, arity] : sig.functions()) {
    auto it = functions.find(f);
    if (it == functions.end()) throw std::invalid_argument("function '" + f + "' uninterpreted");
    std::size_t expected = 1;
    for (std::size_t i = 0; i < arity; ++i) expected *= domain_size;
    if (it->second.size() != expected)
      throw std::invalid_argument("function '" + f + "' is not total");
  }
}

nlohmann::json structure_to_json(const SigmaStructure& s) {
  nlohmann::json domain = nlohmann::json::array();
  for (Element e = 0; e < s.domain_size; ++e) domain.push_back(element_name(e));
  nlohmann::json consts = nlohmann::json::object();
  for (const auto& [c, e] : s.constants) consts[c] = element_name(e);
  nlohmann::json preds = nlohmann::json::object();
  for (const auto& [p, tuples] : s.predicates) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& t : tuples) {
      nlohmann::json row = nlohmann::json::array();
      for (auto e : t) row.push_back(element_name(e));
      rows.push_back(row);
    }
    preds[p] = rows;
  }
  nlohmann::json out = {{"domain", domain}, {"constants", consts}, {"predicates", preds}};
  if (!s.functions.empty()) {
    nlohmann::json funcs = nlohmann::json::object();
    for (const auto& [f, table] : s.functions) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [args, value] : table) {
        nlohmann::json in = nlohmann::json::array();
        for (auto e : args) in.push_back(element_name(e));
        rows.push_back({{"args", in}, {"value", element_name(value)}});
      }
      funcs[f] = rows;
    }
    out["functions"] = funcs;
  }
  return out;
}

std::string describe_structure(const SigmaStructure& s) {
  std::ostringstream os;
  os << "domain {";
  for (Element e = 0; e < s.domain_size; ++e) os << (e ? ", " : "") << element_name(e);
  os << "}";
  for (const auto& [c, e] : s.constants) os << "; " << c << "=" << element_name(e);
  for (const auto& [p, tuples] : s.predicates) {
    os << "; " << p << "={";
    bool first = true;
    for (const auto& t : tuples) {
      os << (first ? "" : ", ");
      first = false;
      if (t.size() == 1) {
        os << element_name(t[0]);
      } else {
        os << "(";
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << element_name(t[i]);
        os << ")";
      }
    }
    os << "}";
  }
  for (const auto& [f, table] : s.functions) {
    os << "; " << f << "=[";
    bool first = true;
    for (const auto& [args, value] : table) {
      os << (first ? "" : ", ");
      first = false;
      for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << element_name(args[i]);
      os << "->" << element_name(value);
    }
    os << "]";
  }
  return os.str();
}

Element eval_term(const Term& t, const SigmaStructure& s, const Assignment& env) {
  switch (t.kind()) {
    case TermKind::Variable: {
      auto it = env.find(t.name());
      if (it == env.end()) throw std::invalid_argument("unbound variable '" + t.name() + "'");
      return it->second;
    }
    case TermKind::Constant: {
      auto it = s.constants.find(t.name());
      if (it == s.constants.end())
        throw std::invalid_argument("constant '" + t.name() + "' uninterpreted");
      return it->second;
    }
    case TermKind::Function: {
      Tuple args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(eval_term(a, s, env));
      auto fit = s.functions.find(t.name());
      if (fit == s.functions.end())
        throw std::invalid_argument("function '" + t.name() + "' uninterpreted");
      auto vit = fit->second.find(args);
      if (vit == fit->second.end())
        throw std::invalid_argument("function '" + t.name() + "' undefined on argument tuple");
      return vit->second;
    }
  }
  return 0;
}

bool eval(const Formula& f, const SigmaStructure& s, const Assignment& env) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      Tuple t;
      t.reserve(f.args().size());
      for (const auto& a : f.args()) t.push_back(eval_term(a, s, env));
      auto it = s.predicates.find(f.predicate());
      return it != s.predicates.end() && it->second.count(t) > 0;
    }
    case FormulaKind::Not:
      return !eval(f.operand(), s, env);
    case FormulaKind::Binary: {
      const bool a = eval(f.left(), s, env);
      switch (f.connective()) {
        case fol::Connective::And: return a && eval(f.right(), s, env);
        case fol::Connective::Or: return a || eval(f.right(), s, env);
        case fol::Connective::Implies: return !a || eval(f.right(), s, env);
        case fol::Connective::Iff: return a == eval(f.right(), s, env);
      }
      return false;
    }
    case FormulaKind::Quantified: {
      Assignment inner = env;
      const bool universal = f.quantifier() == fol::Quantifier::Forall;
      for (Element d = 0; d < s.domain_size; ++d) {
        inner[f.variable()] = d;
        const bool holds = eval(f.body(), s, inner);
        if (universal && !holds) return false;
        if (!universal && holds) return true;
      }
      return universal;
    }
  }
  return false;
}

}  // namespace folbench::equiv
