#pragma once

#include <string>

#include "folbench/fol/formula.hpp"

namespace folbench::fol {

/// Canonical Unicode rendering with the fewest parentheses that reparse to
/// the same tree. Quantified subformulas are bracketed only when more text
/// follows them in the same group.
std::string print_formula(const Formula& f);

std::string print_term(const Term& t);

}  // namespace folbench::fol
