#include "folbench/transform/perturb.hpp"

#include <algorithm>

namespace folbench::transform {

using fol::Connective;
using fol::Formula;
using fol::FormulaKind;

const char* edit_kind_name(EditKind k) noexcept {
  switch (k) {
    case EditKind::ConnectiveSwap: return "connective_swap";
    case EditKind::QuantifierFlip: return "quantifier_flip";
    case EditKind::NegationInsert: return "negation_insert";
    case EditKind::NegationRemove: return "negation_remove";
  }
  return "?";
}

namespace {

// Edits of the subtree `f`, each returned as the rebuilt subtree.
void collect(const Formula& f, std::size_t& next_site, bool under_not,
             std::vector<Perturbation>& out) {
  const auto site = next_site++;
  switch (f.kind()) {
    case FormulaKind::Atom:
      if (!under_not) out.push_back({Formula::negation(f), EditKind::NegationInsert, site});
      return;
    case FormulaKind::Not: {
      if (f.operand().is_atom()) out.push_back({f.operand(), EditKind::NegationRemove, site});
      std::vector<Perturbation> inner;
      collect(f.operand(), next_site, true, inner);
      for (auto& p : inner) out.push_back({Formula::negation(p.formula), p.kind, p.site_index});
      return;
    }
    case FormulaKind::Quantified: {
      const auto flipped = f.quantifier() == fol::Quantifier::Forall ? fol::Quantifier::Exists
                                                                     : fol::Quantifier::Forall;
      out.push_back({Formula::quantified(flipped, f.variable(), f.body()), EditKind::QuantifierFlip, site});
      std::vector<Perturbation> inner;
      collect(f.body(), next_site, false, inner);
      for (auto& p : inner)
        out.push_back({Formula::quantified(f.quantifier(), f.variable(), p.formula), p.kind, p.site_index});
      return;
    }
    case FormulaKind::Binary: {
      for (auto c : {Connective::And, Connective::Or, Connective::Implies, Connective::Iff})
        if (c != f.connective())
          out.push_back({Formula::binary(c, f.left(), f.right()), EditKind::ConnectiveSwap, site});
      std::vector<Perturbation> inner;
      collect(f.left(), next_site, false, inner);
      for (auto& p : inner)
        out.push_back({Formula::binary(f.connective(), p.formula, f.right()), p.kind, p.site_index});
      inner.clear();
      collect(f.right(), next_site, false, inner);
      for (auto& p : inner)
        out.push_back({Formula::binary(f.connective(), f.left(), p.formula), p.kind, p.site_index});
      return;
    }
  }
}

}  // namespace

std::vector<Perturbation> enumerate_perturbations(const Formula& f) {
  std::vector<Perturbation> all;
  std::size_t site = 0;
  collect(f, site, false, all);
  std::vector<Perturbation> out;
  for (auto& p : all) {
    if (p.formula == f) continue;
    if (std::any_of(out.begin(), out.end(), [&](const Perturbation& q) { return q.formula == p.formula; }))
      continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Perturbation> sample_perturbations(const Formula& f, std::size_t k, Rng& rng) {
  const auto all = enumerate_perturbations(f);
  std::vector<Perturbation> out;
  for (auto i : rng.sample_indices(all.size(), std::min(k, all.size()))) out.push_back(all[i]);
  return out;
}

std::vector<Perturbation> sample_perturbations(const Formula& f, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return sample_perturbations(f, k, rng);
}

}  // namespace folbench::transform
