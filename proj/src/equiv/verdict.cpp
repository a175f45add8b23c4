#include "folbench/equiv/verdict.hpp"

namespace folbench::equiv {

const char* to_string(VerdictKind k) noexcept {
  switch (k) {
    case VerdictKind::Equivalent: return "equivalent";
    case VerdictKind::NotEquivalent: return "not_equivalent";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(UnknownReason r) noexcept {
  switch (r) {
    case UnknownReason::None: return "none";
    case UnknownReason::BoundExhausted: return "bound_exhausted";
    case UnknownReason::SolverUnknown: return "solver_unknown";
    case UnknownReason::Timeout: return "timeout";
  }
  return "none";
}

nlohmann::json verdict_to_json(const EquivVerdict& v) {
  nlohmann::json j = {{"verdict", to_string(v.kind)}, {"method", v.method}};
  if (v.kind == VerdictKind::Unknown) j["reason"] = to_string(v.reason);
  if (v.kind == VerdictKind::NotEquivalent) {
    j["witness"] = v.witness ? structure_to_json(*v.witness) : nlohmann::json(nullptr);
  }
  if (v.structures_checked) j["structures_checked"] = v.structures_checked;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

}  // namespace folbench::equiv
