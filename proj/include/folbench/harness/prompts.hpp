#pragma once

#include <string>

#include <json.hpp>

#include "folbench/fol/signature.hpp"
#include "folbench/transform/candidates.hpp"

namespace folbench::harness {

struct Prompt {
  std::string system;
  std::string user;
};

/// Text of one template (1..6) with its placeholders filled. 1/2 are the
/// logical-translation system/user prompts, 3/4 most similar, 5/6 ranking.
/// The choice templates follow `set->variant`. Throws MissingPlaceholder
/// when a needed value (ontology, candidate set) is absent and ConfigError
/// for an unknown id.
std::string render_template(int template_id, const fol::Instance& inst,
                            const transform::CandidateSet* set = nullptr);

/// The system/user pair that `template_id` belongs to.
Prompt render_prompt(int template_id, const fol::Instance& inst,
                     const transform::CandidateSet* set = nullptr);

/// "Cube/1: x1 is a cube" lines, one per predicate.
std::string predicate_symbol_lines(const fol::Ontology& o);
/// "A: A" lines, one per constant.
std::string constant_symbol_lines(const fol::Ontology& o);

/// Instruction prepended for instruction-aware embedding models.
std::string embedding_instruction(transform::Variant v);

/// JSON schema for the structured reply {reasoning, answer}, where answer is
/// a string (logical translation), an integer (most similar) or an integer
/// list (ranking).
nlohmann::json output_schema(const std::string& task);

}  // namespace folbench::harness
