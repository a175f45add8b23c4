#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "folbench/fol/formula.hpp"
#include "folbench/rng.hpp"

namespace folbench::transform {

enum class EditKind { ConnectiveSwap, QuantifierFlip, NegationInsert, NegationRemove };

const char* edit_kind_name(EditKind k) noexcept;

struct Perturbation {
  fol::Formula formula;
  EditKind kind;
  /// Preorder index of the edited node in the original formula.
  std::size_t site_index;
};

/// Every formula one elementary edit away from `f`: a binary connective
/// replaced by one of the other three, a quantifier flipped, a positive
/// literal wrapped in ¬ or a negative literal stripped. Sites are visited in
/// preorder. Duplicates (first occurrence kept) and results equal to `f` are
/// dropped.
std::vector<Perturbation> enumerate_perturbations(const fol::Formula& f);

/// min(k, available) perturbations drawn uniformly without replacement.
std::vector<Perturbation> sample_perturbations(const fol::Formula& f, std::size_t k,
                                               std::uint64_t seed);
std::vector<Perturbation> sample_perturbations(const fol::Formula& f, std::size_t k, Rng& rng);

}  // namespace folbench::transform
