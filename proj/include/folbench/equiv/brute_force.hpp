#pragma once

#include <cstddef>
#include <cstdint>

#include "folbench/equiv/verdict.hpp"
#include "folbench/fol/formula.hpp"
#include "folbench/fol/signature.hpp"

namespace folbench::equiv {

struct BruteForceOptions {
  std::size_t max_domain = 3;
  /// Total number of structures evaluated across all domain sizes.
  std::uint64_t budget = 200'000;
  /// Seed for the sampled (non-exhaustive) part of the search.
  std::uint64_t seed = 0;
};

/// Searches finite structures of size 1..max_domain for one on which exactly
/// one of `f1`, `f2` holds. A domain size is enumerated exhaustively when its
/// interpretation count fits in the remaining budget and sampled otherwise.
/// Only symbols occurring in the formulas are enumerated; function symbols are
/// enumerated up to domain size 2.
///
/// Returns NotEquivalent with the first distinguishing structure (lowest
/// enumeration index), else Unknown(BoundExhausted). Never Equivalent.
/// Throws BudgetExceeded if budget < 1.
///
/// The search is split across OpenMP threads; the result is identical to
/// brute_force_check_serial.
EquivVerdict brute_force_check(const fol::Formula& f1, const fol::Formula& f2,
                               const fol::Signature& sig, const BruteForceOptions& opts = {});

/// Single-threaded reference of brute_force_check.
EquivVerdict brute_force_check_serial(const fol::Formula& f1, const fol::Formula& f2,
                                      const fol::Signature& sig,
                                      const BruteForceOptions& opts = {});

}  // namespace folbench::equiv
