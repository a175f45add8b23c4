#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "folbench/equiv/brute_force.hpp"
#include "folbench/equiv/solver.hpp"
#include "folbench/harness/client.hpp"
#include "folbench/harness/dataset.hpp"
#include "folbench/metrics/report.hpp"
#include "folbench/transform/candidates.hpp"

namespace folbench::harness {

struct ModelDescriptor {
  /// "dialogue" or "embedding".
  std::string kind = "dialogue";
  std::string endpoint;
  std::string name;
  int max_completion_tokens = 2500;
  std::optional<std::string> embedding_instruction;

  bool is_embedding() const { return kind == "embedding"; }
};

struct SolverSettings {
  /// Use the external solver for translation checks when it is available.
  bool use_solver = true;
  equiv::SolverConfig solver;
  /// Finite-model search used when no solver is available and for the
  /// candidate-set oracle checks.
  equiv::BruteForceOptions brute_force{3, 20'000, 0};
  /// Run the oracle on perturbations (equiv_to_original) and on φ_eq.
  bool oracle_checks = true;
  /// Keep every SMT script under <run dir>/smt.
  bool keep_smt = false;
};

struct RunConfig {
  std::string dataset;
  DatasetFormat format = DatasetFormat::TripleJsonl;
  /// logical_translation, most_similar or ranking.
  std::string task = "most_similar";
  transform::Variant variant = transform::Variant::FOL;
  /// Perturbation count; unset means 8 for most_similar, 3 for ranking.
  std::optional<std::size_t> k;
  std::vector<std::uint64_t> seeds{3, 12, 26, 85, 107};
  ModelDescriptor model;
  SolverSettings solver;
  nlgen::RenderMode render_mode = nlgen::RenderMode::Plain;
  /// Parent of runs/<run_id>; empty disables writing.
  std::string output_dir = "runs";
  std::size_t concurrency = 8;
  int max_attempts = 4;
  /// First retry delay; doubles on each further attempt.
  double backoff_ms = 500;

  std::size_t effective_k() const;
  /// Throws ConfigError.
  void validate() const;
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

/// Hash of the configuration, as 16 hex digits. Depends on nothing but the
/// configuration, so reruns land in the same directory.
std::string run_id(const RunConfig& cfg);

struct RunRecord {
  std::string instance_id;
  std::uint64_t seed = 0;
  std::string task;
  std::string variant;
  std::string system_prompt;
  std::string user_prompt;
  std::string raw_reply;
  /// Formula text, position, ranking, or embedding digests.
  nlohmann::json parsed;
  nlohmann::json verdict;
  /// Score name → value, e.g. {"logical_translation": 1, "bleu": 0.4}.
  std::map<std::string, double> scores;
  std::vector<std::string> flags;
  int attempts = 0;
  double wall_ms = 0;

  nlohmann::json to_json() const;
  static RunRecord from_json(const nlohmann::json& j);
};

struct RunResult {
  std::string run_id;
  std::vector<RunRecord> records;
  metrics::ScoreReport report;
  std::optional<std::filesystem::path> run_dir;
  std::size_t dropped_xor = 0;
};

/// The candidate set shown for (instance, seed) under cfg's task and
/// variant. Mocks use this to know the answer.
transform::CandidateSet plan_choice_task(const fol::Instance& inst, const RunConfig& cfg,
                                         std::uint64_t seed);

RunResult run_logical_translation(const RunConfig& cfg, const std::vector<fol::Instance>& data,
                                  ModelClient& client);
RunResult run_choice_task(const RunConfig& cfg, const std::vector<fol::Instance>& data,
                          ModelClient& client);
RunResult run_embedding_task(const RunConfig& cfg, const std::vector<fol::Instance>& data,
                             ModelClient& client);

/// Dispatches on task and model kind.
RunResult run_task(const RunConfig& cfg, const std::vector<fol::Instance>& data, ModelClient& client);

/// Ingests cfg.dataset, runs, and writes runs/<run_id>/{config.json,
/// records.jsonl, report.json, report.csv} under cfg.output_dir.
RunResult run_benchmark(const RunConfig& cfg, ModelClient& client);

void write_run(const RunConfig& cfg, const RunResult& result, const std::filesystem::path& dir);

}  // namespace folbench::harness
