#include "folbench/transform/sites.hpp"

#include <stdexcept>

namespace folbench::transform {

using fol::Formula;
using fol::FormulaKind;

namespace {

const Formula* find(const Formula& f, std::size_t& remaining) {
  if (remaining == 0) return &f;
  --remaining;
  switch (f.kind()) {
    case FormulaKind::Atom: return nullptr;
    case FormulaKind::Not: return find(f.operand(), remaining);
    case FormulaKind::Quantified: return find(f.body(), remaining);
    case FormulaKind::Binary:
      if (const auto* l = find(f.left(), remaining)) return l;
      return find(f.right(), remaining);
  }
  return nullptr;
}

Formula replace(const Formula& f, std::size_t& remaining,
                const std::function<Formula(const Formula&)>& fn, bool& done) {
  if (remaining == 0) {
    done = true;
    return fn(f);
  }
  --remaining;
  switch (f.kind()) {
    case FormulaKind::Atom: return f;
    case FormulaKind::Not: {
      auto op = replace(f.operand(), remaining, fn, done);
      return done ? Formula::negation(op) : f;
    }
    case FormulaKind::Quantified: {
      auto body = replace(f.body(), remaining, fn, done);
      return done ? Formula::quantified(f.quantifier(), f.variable(), body) : f;
    }
    case FormulaKind::Binary: {
      auto l = replace(f.left(), remaining, fn, done);
      if (done) return Formula::binary(f.connective(), l, f.right());
      auto r = replace(f.right(), remaining, fn, done);
      return done ? Formula::binary(f.connective(), f.left(), r) : f;
    }
  }
  return f;
}

}  // namespace

const Formula& subformula_at(const Formula& f, std::size_t site) {
  auto remaining = site;
  const auto* r = find(f, remaining);
  if (!r) throw std::out_of_range("no subformula at site " + std::to_string(site));
  return *r;
}

Formula replace_at(const Formula& f, std::size_t site,
                   const std::function<Formula(const Formula&)>& fn) {
  auto remaining = site;
  bool done = false;
  auto r = replace(f, remaining, fn, done);
  if (!done) throw std::out_of_range("no subformula at site " + std::to_string(site));
  return r;
}

}  // namespace folbench::transform
