#include "folbench/metrics/task_scores.hpp"

#include <set>

#include "folbench/errors.hpp"

namespace folbench::metrics {

int score_most_similar(std::size_t answer_position, const transform::CandidateSet& set) {
  if (answer_position < 1 || answer_position > set.size())
    throw PositionOutOfRange("position " + std::to_string(answer_position) + " outside 1.." +
                             std::to_string(set.size()));
  return answer_position == set.answers.original ? 1 : 0;
}

bool is_permutation_of_positions(const std::vector<std::size_t>& ranking, std::size_t n) {
  if (ranking.size() != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (auto p : ranking) {
    if (p < 1 || p > n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

RankingScore score_ranking(const std::vector<std::size_t>& ranking,
                           const transform::AnswerPositions& a, std::size_t n) {
  if (!is_permutation_of_positions(ranking, n))
    throw NotAPermutation("ranking is not a permutation of 1.." + std::to_string(n));
  if (!a.equivalent || !a.negation || !a.negation_nnf || n < 4)
    throw std::invalid_argument("not a ranking candidate set");
  RankingScore s;
  const std::set<std::size_t> top{ranking[0], ranking[1]};
  const std::set<std::size_t> bottom{ranking[n - 2], ranking[n - 1]};
  s.eq = top == std::set<std::size_t>{a.original, *a.equivalent} ? 1 : 0;
  s.neg = bottom == std::set<std::size_t>{*a.negation, *a.negation_nnf} ? 1 : 0;
  s.both = s.eq * s.neg;
  return s;
}

RankingScore score_ranking(const std::vector<std::size_t>& ranking, const transform::CandidateSet& set) {
  return score_ranking(ranking, set.answers, set.size());
}

}  // namespace folbench::metrics
