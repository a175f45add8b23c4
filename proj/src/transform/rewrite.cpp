#include "folbench/transform/rewrite.hpp"

#include <stdexcept>

#include "folbench/fol/normal_form.hpp"
#include "folbench/transform/sites.hpp"

namespace folbench::transform {

using fol::Connective;
using fol::Formula;
using fol::FormulaKind;

namespace {

constexpr RewriteRule kRules[] = {RewriteRule::DoubleNegation, RewriteRule::DeMorgan,
                                  RewriteRule::Commutativity, RewriteRule::Distributivity,
                                  RewriteRule::ImplicationExpansion};

bool is_binary(const Formula& f, Connective c) { return f.is_binary() && f.connective() == c; }

std::optional<Formula> de_morgan(const Formula& f) {
  if (f.is_not() && f.operand().is_binary()) {
    const auto& g = f.operand();
    if (g.connective() == Connective::And)
      return Formula::disj(Formula::negation(g.left()), Formula::negation(g.right()));
    if (g.connective() == Connective::Or)
      return Formula::conj(Formula::negation(g.left()), Formula::negation(g.right()));
  }
  if (f.is_binary() && f.left().is_not() && f.right().is_not()) {
    const auto& a = f.left().operand();
    const auto& b = f.right().operand();
    if (f.connective() == Connective::Or) return Formula::negation(Formula::conj(a, b));
    if (f.connective() == Connective::And) return Formula::negation(Formula::disj(a, b));
  }
  return std::nullopt;
}

std::optional<Formula> distribute(const Formula& f) {
  if (is_binary(f, Connective::And) && is_binary(f.right(), Connective::Or)) {
    const auto& a = f.left();
    return Formula::disj(Formula::conj(a, f.right().left()), Formula::conj(a, f.right().right()));
  }
  if (is_binary(f, Connective::Or) && is_binary(f.right(), Connective::And)) {
    const auto& a = f.left();
    return Formula::conj(Formula::disj(a, f.right().left()), Formula::disj(a, f.right().right()));
  }
  return std::nullopt;
}

}  // namespace

const char* rule_name(RewriteRule r) noexcept {
  switch (r) {
    case RewriteRule::DoubleNegation: return "double_negation";
    case RewriteRule::DeMorgan: return "de_morgan";
    case RewriteRule::Commutativity: return "commutativity";
    case RewriteRule::Distributivity: return "distributivity";
    case RewriteRule::ImplicationExpansion: return "implication_expansion";
  }
  return "?";
}

std::optional<RewriteRule> rule_from_name(const std::string& name) {
  for (auto r : kRules)
    if (name == rule_name(r)) return r;
  return std::nullopt;
}

std::optional<Formula> rewrite_node(const Formula& node, RewriteRule rule) {
  std::optional<Formula> r;
  switch (rule) {
    case RewriteRule::DoubleNegation:
      r = Formula::negation(fol::to_nnf(Formula::negation(node)));
      break;
    case RewriteRule::DeMorgan: r = de_morgan(node); break;
    case RewriteRule::Commutativity:
      if (node.is_binary() && node.connective() != Connective::Implies && node.left() != node.right())
        r = Formula::binary(node.connective(), node.right(), node.left());
      break;
    case RewriteRule::Distributivity: r = distribute(node); break;
    case RewriteRule::ImplicationExpansion:
      if (is_binary(node, Connective::Implies))
        r = Formula::disj(Formula::negation(node.left()), node.right());
      break;
  }
  if (r && *r == node) return std::nullopt;
  return r;
}

std::vector<RewriteSite> applicable_rewrites(const Formula& f) {
  std::vector<RewriteSite> out;
  const auto n = f.size();
  for (std::size_t site = 0; site < n; ++site) {
    const auto& node = subformula_at(f, site);
    for (auto rule : kRules)
      if (rewrite_node(node, rule)) out.push_back({site, rule});
  }
  return out;
}

Formula apply_rewrite(const Formula& f, const RewriteSite& site) {
  return replace_at(f, site.site_index, [&](const Formula& node) {
    auto r = rewrite_node(node, site.rule);
    if (!r)
      throw std::invalid_argument(std::string(rule_name(site.rule)) + " does not apply at site " +
                                  std::to_string(site.site_index));
    return *r;
  });
}

Rewrite equivalent_rewrite(const Formula& f, Rng& rng) {
  const auto sites = applicable_rewrites(f);
  if (sites.empty()) throw std::logic_error("no applicable rewrite");
  const auto& s = sites[rng.below(sites.size())];
  return {apply_rewrite(f, s), s.rule, s.site_index};
}

Rewrite equivalent_rewrite(const Formula& f, std::uint64_t seed) {
  Rng rng(seed);
  return equivalent_rewrite(f, rng);
}

std::optional<Rewrite> equivalent_rewrite_with(const Formula& f, RewriteRule rule, Rng& rng) {
  std::vector<RewriteSite> sites;
  for (const auto& s : applicable_rewrites(f))
    if (s.rule == rule) sites.push_back(s);
  if (sites.empty()) return std::nullopt;
  const auto& s = sites[rng.below(sites.size())];
  return Rewrite{apply_rewrite(f, s), s.rule, s.site_index};
}

}  // namespace folbench::transform
