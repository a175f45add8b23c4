#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "folbench/equiv/brute_force.hpp"
#include "folbench/fol/signature.hpp"
#include "folbench/nlgen/translate.hpp"
#include "folbench/transform/perturb.hpp"
#include "folbench/transform/rewrite.hpp"

namespace folbench::transform {

enum class Variant { FOL, NL };
enum class TaskKind { MostSimilar, Ranking };
enum class LabelKind { Original, Perturbation, Negation, NegationNNF, Equivalent };

const char* variant_name(Variant v) noexcept;
const char* task_name(TaskKind t) noexcept;
const char* label_kind_name(LabelKind k) noexcept;
std::optional<Variant> variant_from_name(const std::string& s);

struct CandidateLabel {
  LabelKind kind = LabelKind::Original;
  // Perturbation only.
  EditKind edit = EditKind::ConnectiveSwap;
  std::size_t site_index = 0;
  // Equivalent only.
  RewriteRule rule = RewriteRule::DoubleNegation;

  /// "original", "perturbation:connective_swap@3", "equivalent:de_morgan", ...
  std::string to_string() const;
};

struct Candidate {
  fol::Formula formula;
  /// Printed formula (FOL variant) or its English rendering (NL variant).
  std::string text;
  CandidateLabel label;
  /// Perturbations only: the finite-model search found no structure telling
  /// this candidate apart from the original.
  bool equiv_to_original = false;
};

/// 1-based positions after shuffling.
struct AnswerPositions {
  std::size_t original = 0;
  std::optional<std::size_t> equivalent;
  std::optional<std::size_t> negation;
  std::optional<std::size_t> negation_nnf;
};

struct CandidateSet {
  std::string instance_id;
  Variant variant = Variant::FOL;
  TaskKind task = TaskKind::MostSimilar;
  std::vector<Candidate> candidates;
  std::uint64_t shuffle_seed = 0;
  AnswerPositions answers;
  /// Ranking only: ¬φ and (¬φ)_nnf are the same formula (φ is an atom).
  bool degenerate_negation = false;

  std::size_t size() const noexcept { return candidates.size(); }
  const Candidate& at_position(std::size_t pos) const { return candidates.at(pos - 1); }
};

struct BuildOptions {
  nlgen::RenderMode render_mode = nlgen::RenderMode::Plain;
  /// Run the finite-model search on every perturbation to set
  /// equiv_to_original, and on φ_eq to catch unsound rewrites.
  bool oracle_checks = true;
  equiv::BruteForceOptions oracle;
};

/// Stream seed used for one (instance, task) pair; identical for the FOL and
/// NL variants, so both present the same formulas in the same order.
std::uint64_t candidate_stream_seed(std::uint64_t seed, const std::string& instance_id, TaskKind task);

/// {φ} plus up to k perturbations, shuffled.
CandidateSet build_most_similar(const fol::Instance& inst, std::size_t k, std::uint64_t seed,
                                Variant variant, const BuildOptions& opts = {});

/// {φ, up to k perturbations, ¬φ, (¬φ)_nnf, φ_eq}, shuffled. Perturbations
/// equal to ¬φ, (¬φ)_nnf or φ_eq are not drawn. Throws std::logic_error if
/// the oracle refutes φ ≡ φ_eq.
CandidateSet build_ranking(const fol::Instance& inst, std::size_t k, std::uint64_t seed,
                           Variant variant, const BuildOptions& opts = {});

/// What the model sees: ids, task, variant and candidate texts in order.
nlohmann::json candidate_set_payload(const CandidateSet& s);
/// Labels, formulas and answer positions; kept out of prompts.
nlohmann::json candidate_set_ground_truth(const CandidateSet& s);

}  // namespace folbench::transform
