#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "folbench/equiv/structure.hpp"
#include "folbench/fol/formula.hpp"
#include "folbench/fol/signature.hpp"
#include "folbench/rng.hpp"

namespace folbench::testkit {

struct GenLimits {
  int max_connectives = 6;
  int max_quantifiers = 2;
};

// P/1, Q/1, R/2, S/2 and constants a, b.
fol::Signature small_signature();

// Random closed formula over `sig`. Each quantifier binds a fresh variable.
fol::Formula random_closed_formula(Rng& rng, const fol::Signature& sig, const GenLimits& lim = {});

// Random formula with free variables drawn from `free`.
fol::Formula random_open_formula(Rng& rng, const fol::Signature& sig,
                                 const std::vector<std::string>& free, const GenLimits& lim = {});

equiv::SigmaStructure random_structure(Rng& rng, const fol::Signature& sig, std::size_t domain);

// Second, table-driven evaluator kept separate from equiv::eval.
bool naive_eval(const fol::Formula& f, const equiv::SigmaStructure& s,
                std::vector<std::pair<std::string, std::size_t>> env = {});

}  // namespace folbench::testkit
