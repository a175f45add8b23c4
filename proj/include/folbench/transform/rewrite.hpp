#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "folbench/fol/formula.hpp"
#include "folbench/rng.hpp"

namespace folbench::transform {

enum class RewriteRule {
  DoubleNegation,        // α ⇒ ¬((¬α)_nnf)
  DeMorgan,              // ¬(α∧β) ⇔ ¬α∨¬β, ¬(α∨β) ⇔ ¬α∧¬β
  Commutativity,         // α∘β ⇒ β∘α for ∘ ∈ {∧, ∨, ↔}, α ≠ β
  Distributivity,        // α∧(β∨γ) ⇒ (α∧β)∨(α∧γ), α∨(β∧γ) ⇒ (α∨β)∧(α∨γ)
  ImplicationExpansion,  // α→β ⇒ ¬α∨β
};

const char* rule_name(RewriteRule r) noexcept;
std::optional<RewriteRule> rule_from_name(const std::string& name);

struct RewriteSite {
  std::size_t site_index;
  RewriteRule rule;
  friend bool operator==(const RewriteSite&, const RewriteSite&) = default;
};

struct Rewrite {
  fol::Formula formula;
  RewriteRule rule;
  std::size_t site_index;
};

/// Rewrite at `node` alone, or nullopt when the rule does not apply or would
/// give back the same node.
std::optional<fol::Formula> rewrite_node(const fol::Formula& node, RewriteRule rule);

/// All (site, rule) pairs that change `f`, sites in preorder, rules in
/// declaration order. Never empty: double negation changes every atom.
std::vector<RewriteSite> applicable_rewrites(const fol::Formula& f);

/// Throws std::invalid_argument if the pair is not applicable.
fol::Formula apply_rewrite(const fol::Formula& f, const RewriteSite& site);

/// One applicable (site, rule) pair chosen uniformly and applied.
Rewrite equivalent_rewrite(const fol::Formula& f, std::uint64_t seed);
Rewrite equivalent_rewrite(const fol::Formula& f, Rng& rng);

/// As above, restricted to one rule; nullopt if it applies nowhere.
std::optional<Rewrite> equivalent_rewrite_with(const fol::Formula& f, RewriteRule rule, Rng& rng);

}  // namespace folbench::transform
