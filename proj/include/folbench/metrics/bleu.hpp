#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folbench/fol/formula.hpp"

namespace folbench::metrics {

/// Identifiers are one token each; every other non-blank character
/// (operators, quantifiers, parentheses, commas) is a token of its own.
std::vector<std::string> formula_tokens(std::string_view text);

/// Sentence BLEU with one reference: modified n-gram precisions for n=1..4,
/// geometric mean, brevity penalty exp(1 - r/c) when c < r. No smoothing, so
/// any zero precision gives 0.
double bleu(const std::vector<std::string>& reference, const std::vector<std::string>& candidate);

/// BLEU over the printed, tokenised formulas. Not symmetric.
double bleu_formula(const fol::Formula& reference, const fol::Formula& candidate);

}  // namespace folbench::metrics
