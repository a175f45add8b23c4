#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "folbench/equiv/verdict.hpp"
#include "folbench/fol/formula.hpp"
#include "folbench/fol/signature.hpp"

namespace folbench::equiv {

struct SolverConfig {
  /// Executable name or path; resolved against PATH.
  std::string path = "z3";
  /// Arguments placed before the script is streamed on stdin. Empty means
  /// "pick defaults for the solver's basename" (z3: -in, cvc5: --lang=smt2).
  std::vector<std::string> args;
  /// Extra flags appended verbatim (quantifier options and the like).
  std::vector<std::string> extra_args;
  int timeout_ms = 10'000;
  /// Ask for a model on sat and read it back into a witness structure.
  bool request_model = true;
  /// When set, every script is also written to this directory.
  std::optional<std::filesystem::path> keep_smt_dir;

  /// Reads FOLBENCH_SOLVER from the environment when set.
  static SolverConfig from_environment();
};

/// Process-wide cap on concurrently running solver processes (default 8).
void set_max_concurrent_solvers(std::size_t n);
std::size_t max_concurrent_solvers();

/// True if `cfg.path` resolves to an executable.
bool solver_available(const SolverConfig& cfg);

/// Decides f1 ≡ f2 by running the emitted SMT-LIB script through the
/// configured solver: unsat → Equivalent, sat → NotEquivalent (with a
/// confirmed witness when a model could be read), unknown or timeout →
/// Unknown. `audit_name` names the kept script file, if scripts are kept.
///
/// Throws SolverNotFound if the executable cannot be resolved and
/// SolverCrashed (carrying stderr) if it produces no answer.
EquivVerdict solver_check(const fol::Formula& f1, const fol::Formula& f2,
                          const fol::Signature& sig, const SolverConfig& cfg = {},
                          const std::string& audit_name = {});

/// Reads a `(get-model)` answer over sort U back into a structure. Returns
/// nullopt when the model uses constructs outside the supported subset.
std::optional<SigmaStructure> read_smt_model(const std::string& model_text,
                                             const fol::Signature& sig);

}  // namespace folbench::equiv
