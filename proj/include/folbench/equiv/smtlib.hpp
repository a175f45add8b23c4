#pragma once

#include <optional>
#include <string>

#include "folbench/fol/formula.hpp"
#include "folbench/fol/signature.hpp"

namespace folbench::equiv {

/// SMT-LIB2 script asserting ¬(f1 ↔ f2) over one uninterpreted sort `U`.
/// Every symbol of `sig` is declared (constants as nullary U functions,
/// predicates as Bool-valued functions over U^n), in name order, so the
/// output is byte-stable. The script ends with (check-sat).
///
/// Symbols are prefixed by namespace (p_, c_, f_, v_) so user names never
/// collide with SMT-LIB keywords.
std::string emit_smtlib(const fol::Formula& f1, const fol::Formula& f2, const fol::Signature& sig);

/// S-expression for a single formula, as it appears inside the assertion.
std::string smt_formula(const fol::Formula& f);

enum class SmtSymbolKind { Predicate, Constant, Function, Variable };

std::string smt_symbol(SmtSymbolKind kind, const std::string& name);

/// Inverse of smt_symbol; nullopt for names this emitter never produces.
std::optional<std::pair<SmtSymbolKind, std::string>> parse_smt_symbol(const std::string& symbol);

}  // namespace folbench::equiv
