#pragma once

#include <cstddef>
#include <functional>

#include "folbench/fol/formula.hpp"

namespace folbench::transform {

// Sites are numbered in preorder: the root is 0, then the left subtree, then
// the right one.

const fol::Formula& subformula_at(const fol::Formula& f, std::size_t site);

/// Copy of `f` with the subformula at `site` replaced by fn(subformula).
fol::Formula replace_at(const fol::Formula& f, std::size_t site,
                        const std::function<fol::Formula(const fol::Formula&)>& fn);

}  // namespace folbench::transform
