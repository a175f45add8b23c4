#pragma once

#include <string>
#include <vector>

#include "folbench/fol/formula.hpp"
#include "folbench/fol/signature.hpp"

namespace folbench::nlgen {

enum class RenderMode {
  /// Grouping is dropped, as in the benchmark prompts. Two formulas that
  /// differ only in bracketing can render identically.
  Plain,
  /// Keeps "(" and ")" around nested compound subformulas.
  Parenthesized,
};

/// Renders `f` as an English sentence from the glossary's predicate and
/// constant meanings. Positive literals use the positive template, negated
/// atoms the negative one; connectives and quantifiers use fixed phrases
/// ("and", "or", "if ..., then ...", "... if and only if ...", "it's false
/// that ...", "there is x such that ...", "for all x ..."). Spaces are
/// normalised, the first character is capitalised and a period is appended.
///
/// Throws MissingGloss for a predicate or constant without a meaning.
std::string translate(const fol::Formula& f, const fol::Glossary& g,
                      RenderMode mode = RenderMode::Plain);

/// Replaces x1..xn in `tmpl` by `args`. Indices beyond args are left as is.
std::string fill_template(const std::string& tmpl, const std::vector<std::string>& args);

}  // namespace folbench::nlgen
