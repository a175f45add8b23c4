#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "folbench/fol/formula.hpp"
#include "folbench/fol/signature.hpp"

namespace folbench::harness {

/// A dialogue reply read as {reasoning, answer}. When the text is not JSON
/// the first balanced {...} block inside it is tried.
struct StructuredReply {
  std::optional<nlohmann::json> object;
  /// The `answer` member, when present.
  std::optional<nlohmann::json> answer;
  bool from_embedded_block = false;
};

StructuredReply parse_structured_reply(const std::string& raw);

struct FormulaExtraction {
  std::optional<fol::Formula> formula;
  /// Text that was parsed, or the last error when nothing parsed.
  std::string text;
  bool fallback = false;
  std::string error;
};

/// Parses `text` as a closed formula over `sig`. If that fails, scans each
/// line for the longest run of whole words that parses.
FormulaExtraction extract_formula(const std::string& text, const fol::Signature& sig);

/// Integer answer: a JSON integer, or a string holding exactly one integer.
std::optional<long long> parse_position_answer(const nlohmann::json& answer);

/// Integer list: a JSON array of integers (or integer strings), or a string
/// listing integers.
std::optional<std::vector<long long>> parse_ranking_answer(const nlohmann::json& answer);

}  // namespace folbench::harness
