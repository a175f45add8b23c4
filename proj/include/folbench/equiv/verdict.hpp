#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "folbench/equiv/structure.hpp"

namespace folbench::equiv {

enum class VerdictKind { Equivalent, NotEquivalent, Unknown };
enum class UnknownReason { None, BoundExhausted, SolverUnknown, Timeout };

const char* to_string(VerdictKind k) noexcept;
const char* to_string(UnknownReason r) noexcept;

/// Outcome of an equivalence check. A NotEquivalent verdict from the
/// finite-model search always carries a witness on which exactly one of the
/// two formulas holds; from the solver the witness is present only when the
/// printed model could be read back and confirmed.
struct EquivVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string method;
  std::optional<SigmaStructure> witness;
  UnknownReason reason = UnknownReason::None;
  std::string detail;
  std::uint64_t structures_checked = 0;

  bool equivalent() const noexcept { return kind == VerdictKind::Equivalent; }
  bool not_equivalent() const noexcept { return kind == VerdictKind::NotEquivalent; }
  bool unknown() const noexcept { return kind == VerdictKind::Unknown; }
};

nlohmann::json verdict_to_json(const EquivVerdict& v);

}  // namespace folbench::equiv
