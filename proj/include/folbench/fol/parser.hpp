#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folbench/fol/formula.hpp"
#include "folbench/fol/signature.hpp"

namespace folbench::fol {

struct ParseOptions {
  /// Expand α ⊕ β into (α ∨ β) ∧ ¬(α ∧ β) instead of raising XorRejected.
  bool expand_xor = false;
};

struct ParseResult {
  Formula formula;
  /// Non-fatal diagnostics, e.g. a quantifier shadowing an outer binder.
  std::vector<std::string> warnings;
  /// Symbols used by the formula (declared or inferred).
  Signature signature;
};

/// Parses `input` against `sig`.
///
/// Precedence from tightest to loosest: ¬, then ∧, ∨ (⊕ shares ∨'s level),
/// →, ↔. ∧ and ∨ associate to the left, → and ↔ to the right. A quantifier
/// takes the longest body that follows it, up to the enclosing closing
/// parenthesis. Bare identifiers in term position become constants when
/// declared as such, variables otherwise.
///
/// ASCII aliases: `forall`, `exists`, `!`/`~`, `&`, `|`, `->`/`=>`, `<->`/`<=>`.
Formula parse_formula(std::string_view input, const Signature& sig, const ParseOptions& opts = {});
ParseResult parse_formula_detailed(std::string_view input, const Signature& sig,
                                   const ParseOptions& opts = {});

/// Parses without a declared signature. Predicates and functions are taken
/// from use; unbound bare identifiers are constants.
ParseResult parse_formula_inferring(std::string_view input, const ParseOptions& opts = {});

}  // namespace folbench::fol
