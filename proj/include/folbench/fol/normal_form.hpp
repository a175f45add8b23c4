#pragma once

#include <set>
#include <string>

#include "folbench/fol/formula.hpp"

namespace folbench::fol {

/// Negation normal form. → and ↔ are expanded first (α→β as ¬α∨β, α↔β as
/// (¬α∨β)∧(¬β∨α)), then negations are pushed to the atoms and double
/// negations cancelled.
Formula to_nnf(const Formula& f);

/// True if f has no → / ↔ and every ¬ sits directly above an atom.
bool is_nnf(const Formula& f);

/// ¬f, verbatim.
Formula negate(const Formula& f);

std::set<std::string> free_vars(const Formula& f);

bool is_closed(const Formula& f);

/// Universal closure: binds every free variable (in name order, outermost
/// first).
Formula universal_closure(const Formula& f);

}  // namespace folbench::fol
