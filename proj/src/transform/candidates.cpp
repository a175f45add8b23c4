#include "folbench/transform/candidates.hpp"

#include <stdexcept>

#include "folbench/errors.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/fol/printer.hpp"

namespace folbench::transform {

using fol::Formula;

const char* variant_name(Variant v) noexcept { return v == Variant::FOL ? "fol" : "nl"; }

const char* task_name(TaskKind t) noexcept {
  return t == TaskKind::MostSimilar ? "most_similar" : "ranking";
}

const char* label_kind_name(LabelKind k) noexcept {
  switch (k) {
    case LabelKind::Original: return "original";
    case LabelKind::Perturbation: return "perturbation";
    case LabelKind::Negation: return "negation";
    case LabelKind::NegationNNF: return "negation_nnf";
    case LabelKind::Equivalent: return "equivalent";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& s) {
  if (s == "fol" || s == "FOL") return Variant::FOL;
  if (s == "nl" || s == "NL") return Variant::NL;
  return std::nullopt;
}

std::string CandidateLabel::to_string() const {
  std::string s = label_kind_name(kind);
  if (kind == LabelKind::Perturbation)
    s += std::string(":") + edit_kind_name(edit) + "@" + std::to_string(site_index);
  else if (kind == LabelKind::Equivalent)
    s += std::string(":") + rule_name(rule);
  return s;
}

std::uint64_t candidate_stream_seed(std::uint64_t seed, const std::string& instance_id, TaskKind task) {
  return derive_stream_seed(seed, instance_id, task_name(task));
}

namespace {

struct Context {
  const fol::Instance& inst;
  fol::Signature sig;
  Variant variant;
  const BuildOptions& opts;
  std::uint64_t stream;
};

Context make_context(const fol::Instance& inst, Variant variant, const BuildOptions& opts,
                     std::uint64_t stream) {
  Context c{inst, {}, variant, opts, stream};
  c.sig = inst.ontology ? inst.ontology->signature : fol::signature_of(inst.formula);
  if (variant == Variant::NL && !inst.ontology)
    throw MissingGloss("instance '" + inst.id + "' has no ontology to render NL candidates");
  return c;
}

Candidate perturbation_candidate(const Context& c, const Perturbation& p, std::size_t index) {
  Candidate cand{p.formula, {}, {}, false};
  cand.label.kind = LabelKind::Perturbation;
  cand.label.edit = p.kind;
  cand.label.site_index = p.site_index;
  if (c.opts.oracle_checks) {
    auto o = c.opts.oracle;
    o.seed = mix64(c.stream + index);
    cand.equiv_to_original = !equiv::brute_force_check(c.inst.formula, p.formula, c.sig, o).not_equivalent();
  }
  return cand;
}

void finish(const Context& c, Rng& rng, CandidateSet& set) {
  rng.shuffle(set.candidates);
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    auto& cand = set.candidates[i];
    cand.text = c.variant == Variant::FOL
                    ? fol::print_formula(cand.formula)
                    : nlgen::translate(cand.formula, c.inst.ontology->glossary, c.opts.render_mode);
    const auto pos = i + 1;
    switch (cand.label.kind) {
      case LabelKind::Original: set.answers.original = pos; break;
      case LabelKind::Equivalent: set.answers.equivalent = pos; break;
      case LabelKind::Negation: set.answers.negation = pos; break;
      case LabelKind::NegationNNF: set.answers.negation_nnf = pos; break;
      case LabelKind::Perturbation: break;
    }
  }
}

}  // namespace

CandidateSet build_most_similar(const fol::Instance& inst, std::size_t k, std::uint64_t seed,
                                Variant variant, const BuildOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  CandidateSet set;
  set.instance_id = inst.id;
  set.variant = variant;
  set.task = TaskKind::MostSimilar;
  set.shuffle_seed = candidate_stream_seed(seed, inst.id, set.task);
  const auto c = make_context(inst, variant, opts, set.shuffle_seed);
  Rng rng(set.shuffle_seed);

  set.candidates.push_back({inst.formula, {}, {}, false});
  const auto perts = sample_perturbations(inst.formula, k, rng);
  for (std::size_t i = 0; i < perts.size(); ++i)
    set.candidates.push_back(perturbation_candidate(c, perts[i], i));
  finish(c, rng, set);
  return set;
}

CandidateSet build_ranking(const fol::Instance& inst, std::size_t k, std::uint64_t seed,
                           Variant variant, const BuildOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  CandidateSet set;
  set.instance_id = inst.id;
  set.variant = variant;
  set.task = TaskKind::Ranking;
  set.shuffle_seed = candidate_stream_seed(seed, inst.id, set.task);
  const auto c = make_context(inst, variant, opts, set.shuffle_seed);
  Rng rng(set.shuffle_seed);

  const auto& phi = inst.formula;
  const auto eq = equivalent_rewrite(phi, rng);
  if (opts.oracle_checks) {
    auto o = opts.oracle;
    o.seed = mix64(set.shuffle_seed);
    if (equiv::brute_force_check(phi, eq.formula, c.sig, o).not_equivalent())
      throw std::logic_error(std::string("rewrite ") + rule_name(eq.rule) + " refuted on " +
                             fol::print_formula(phi));
  }
  const auto neg = fol::negate(phi);
  const auto neg_nnf = fol::to_nnf(neg);
  set.degenerate_negation = neg == neg_nnf;

  std::vector<Perturbation> pool;
  for (auto& p : enumerate_perturbations(phi))
    if (p.formula != neg && p.formula != neg_nnf && p.formula != eq.formula) pool.push_back(std::move(p));

  set.candidates.push_back({phi, {}, {}, false});
  const auto picks = rng.sample_indices(pool.size(), std::min(k, pool.size()));
  for (std::size_t i = 0; i < picks.size(); ++i)
    set.candidates.push_back(perturbation_candidate(c, pool[picks[i]], i));

  Candidate n{neg, {}, {}, false};
  n.label.kind = LabelKind::Negation;
  Candidate nn{neg_nnf, {}, {}, false};
  nn.label.kind = LabelKind::NegationNNF;
  Candidate e{eq.formula, {}, {}, false};
  e.label.kind = LabelKind::Equivalent;
  e.label.rule = eq.rule;
  e.label.site_index = eq.site_index;
  set.candidates.push_back(std::move(n));
  set.candidates.push_back(std::move(nn));
  set.candidates.push_back(std::move(e));
  finish(c, rng, set);
  return set;
}

nlohmann::json candidate_set_payload(const CandidateSet& s) {
  nlohmann::json j;
  j["instance_id"] = s.instance_id;
  j["task"] = task_name(s.task);
  j["variant"] = variant_name(s.variant);
  j["candidates"] = nlohmann::json::array();
  for (const auto& c : s.candidates) j["candidates"].push_back(c.text);
  return j;
}

nlohmann::json candidate_set_ground_truth(const CandidateSet& s) {
  nlohmann::json j;
  j["instance_id"] = s.instance_id;
  j["task"] = task_name(s.task);
  j["variant"] = variant_name(s.variant);
  j["shuffle_seed"] = s.shuffle_seed;
  j["candidates"] = nlohmann::json::array();
  for (std::size_t i = 0; i < s.candidates.size(); ++i) {
    const auto& c = s.candidates[i];
    nlohmann::json e{{"position", i + 1},
                     {"formula", fol::print_formula(c.formula)},
                     {"label", c.label.to_string()}};
    if (c.label.kind == LabelKind::Perturbation) e["equiv_to_original"] = c.equiv_to_original;
    j["candidates"].push_back(std::move(e));
  }
  auto& a = j["answer_positions"];
  a["original"] = s.answers.original;
  if (s.answers.equivalent) a["equivalent"] = *s.answers.equivalent;
  if (s.answers.negation) a["negation"] = *s.answers.negation;
  if (s.answers.negation_nnf) a["negation_nnf"] = *s.answers.negation_nnf;
  if (s.task == TaskKind::Ranking) j["degenerate_negation"] = s.degenerate_negation;
  return j;
}

}  // namespace folbench::transform
