#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace folbench::metrics {

struct ScoreRecord {
  std::string instance_id;
  std::uint64_t seed = 0;
  /// Scored quantity: "logical_translation", "most_similar", "ranking_eq",
  /// "ranking_neg", "ranking_both", "bleu", "le".
  std::string task;
  std::string variant;
  double score = 0.0;
  std::vector<std::string> flags;
};

struct TaskSummary {
  std::string task;
  std::size_t n = 0;
  /// Mean over all records.
  double mean = 0.0;
  /// Population standard deviation of the per-seed means.
  double std_across_seeds = 0.0;
  std::map<std::uint64_t, double> per_seed_mean;
  std::map<std::string, std::size_t> flag_counts;
};

struct ScoreReport {
  std::vector<ScoreRecord> records;
  /// Extra named statistics, e.g. point-biserial correlations; nullopt when
  /// undefined.
  std::map<std::string, std::optional<double>> statistics;

  /// Orders records by (instance_id, seed, task).
  void sort();
  std::vector<TaskSummary> summaries() const;
  std::optional<TaskSummary> summary(const std::string& task) const;

  nlohmann::json to_json() const;
  static ScoreReport from_json(const nlohmann::json& j);
  /// Columns: instance_id, seed, task, variant, score, flags (';'-joined).
  std::string to_csv() const;
};

}  // namespace folbench::metrics
