#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "folbench/fol/formula.hpp"

namespace folbench::metrics {

/// One-to-one pairing of predicate symbols between two formulas. Predicates
/// listed as unmatched are paired with a fresh dummy on the other side.
struct PredicateMatching {
  std::map<std::string, std::string> pairs;  // predicate of f1 -> predicate of f2
  std::vector<std::string> unmatched_left;
  std::vector<std::string> unmatched_right;

  PredicateMatching inverted() const;
};

/// Truth table behind an LE score. Variable 0 is the most significant bit of
/// the column index, so the first row reads 0…0 1…1.
struct LeTable {
  /// "InEU-CountryInEU", "Country-Dummy", ...
  std::vector<std::string> variables;
  std::vector<std::vector<bool>> assignment;  // [variable][column]
  std::vector<bool> left, right;              // [column]
  std::size_t agreeing = 0;

  std::size_t columns() const noexcept { return left.size(); }
  double score() const noexcept {
    return columns() ? static_cast<double>(agreeing) / static_cast<double>(columns()) : 1.0;
  }
  std::string render() const;
};

/// Predicates in order of first occurrence.
std::vector<std::string> predicates_in_order(const fol::Formula& f);

/// The MALLS LE score: quantifiers are stripped, every predicate symbol
/// becomes one propositional variable (matched pairs share one), and the
/// fraction of the 2^n assignments on which both bodies agree is returned in
/// the table. Variables are ordered by first occurrence in f1, then the
/// unmatched predicates of f2.
///
/// Throws MatchingIncomplete if a predicate of either formula is not covered
/// or the pairing is not injective.
LeTable le_table(const fol::Formula& f1, const fol::Formula& f2, const PredicateMatching& m);
double le_score(const fol::Formula& f1, const fol::Formula& f2, const PredicateMatching& m);

/// Exact names first, then greedy pairing by descending name similarity
/// while it exceeds 0.5; leftovers stay unmatched.
PredicateMatching default_matching(const fol::Formula& f1, const fol::Formula& f2);

/// Splits camelCase, acronyms, digits and underscores, lower-cased:
/// "EUCountry" -> {"eu", "country"}.
std::vector<std::string> name_tokens(const std::string& name);

/// 2·LCS / (|a| + |b|) over name_tokens.
double token_similarity(const std::string& a, const std::string& b);
/// 2·LCS / (|a| + |b|) over lower-cased characters.
double char_similarity(const std::string& a, const std::string& b);

}  // namespace folbench::metrics
