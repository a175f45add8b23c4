#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "folbench/transform/candidates.hpp"

namespace folbench::metrics {

/// 1 iff the picked 1-based position is the original's. Throws
/// PositionOutOfRange.
int score_most_similar(std::size_t answer_position, const transform::CandidateSet& set);

struct RankingScore {
  int eq = 0;
  int neg = 0;
  int both = 0;
  friend bool operator==(const RankingScore&, const RankingScore&) = default;
};

/// eq: the first two entries are the original and the equivalent, in any
/// order. neg: the last two are the negation and its NNF, in any order.
/// Throws NotAPermutation unless `ranking` is a permutation of 1..n.
RankingScore score_ranking(const std::vector<std::size_t>& ranking, const transform::CandidateSet& set);
RankingScore score_ranking(const std::vector<std::size_t>& ranking,
                           const transform::AnswerPositions& answers, std::size_t n);

bool is_permutation_of_positions(const std::vector<std::size_t>& ranking, std::size_t n);

}  // namespace folbench::metrics
