#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folbench {

/// Base of every domain error raised by the toolkit. `name()` is the
/// machine-readable error name surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* name() const noexcept = 0;
};

#define FOLBENCH_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                         \
   public:                                                            \
    using Error::Error;                                               \
    const char* name() const noexcept override { return #Type; }      \
  };

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected, const std::string& found)
      : Error("syntax error at offset " + std::to_string(position) + ": expected " + expected +
              ", found " + found),
        position_(position),
        expected_(expected) {}
  const char* name() const noexcept override { return "SyntaxError"; }
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Raised when the parser meets ⊕ and XOR expansion is disabled.
class XorRejected : public SyntaxError {
 public:
  explicit XorRejected(std::size_t position)
      : SyntaxError(position, "a connective other than XOR", "'⊕'") {}
  const char* name() const noexcept override { return "XorRejected"; }
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}
  const char* name() const noexcept override { return "UnknownSymbol"; }
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(const std::string& symbol, std::size_t expected, std::size_t got)
      : Error("symbol '" + symbol + "' expects " + std::to_string(expected) +
              " argument(s), got " + std::to_string(got)),
        symbol_(symbol),
        expected_(expected),
        got_(got) {}
  const char* name() const noexcept override { return "ArityMismatch"; }
  const std::string& symbol() const noexcept { return symbol_; }
  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::string symbol_;
  std::size_t expected_;
  std::size_t got_;
};

FOLBENCH_DEFINE_ERROR(InvalidSignature)
FOLBENCH_DEFINE_ERROR(MissingGloss)
FOLBENCH_DEFINE_ERROR(BudgetExceeded)
FOLBENCH_DEFINE_ERROR(UnsupportedConstruct)
FOLBENCH_DEFINE_ERROR(SolverNotFound)
FOLBENCH_DEFINE_ERROR(MatchingIncomplete)
FOLBENCH_DEFINE_ERROR(PositionOutOfRange)
FOLBENCH_DEFINE_ERROR(NotAPermutation)
FOLBENCH_DEFINE_ERROR(ParseFailure)
FOLBENCH_DEFINE_ERROR(OntologyMismatch)
FOLBENCH_DEFINE_ERROR(MissingPlaceholder)
FOLBENCH_DEFINE_ERROR(ClientError)
FOLBENCH_DEFINE_ERROR(DimensionMismatch)
FOLBENCH_DEFINE_ERROR(ConfigError)

class SolverCrashed : public Error {
 public:
  SolverCrashed(const std::string& what, std::string stderr_text)
      : Error(what), stderr_(std::move(stderr_text)) {}
  const char* name() const noexcept override { return "SolverCrashed"; }
  const std::string& stderr_text() const noexcept { return stderr_; }

 private:
  std::string stderr_;
};

#undef FOLBENCH_DEFINE_ERROR

}  // namespace folbench
