#include "folbench/equiv/brute_force.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "folbench/errors.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/rng.hpp"

namespace folbench::equiv {

using fol::Formula;
using fol::FormulaKind;
using fol::Term;
using fol::TermKind;

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kFunctionDomainCap = 2;
constexpr std::uint64_t kBlock = 1u << 12;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

struct SymbolInfo {
  std::string name;
  std::size_t arity;
};

enum class Op : std::uint8_t { Atom, Not, And, Or, Implies, Iff, Forall, Exists };

struct CTerm {
  TermKind kind;
  int index;  // variable slot, constant id or function id
  std::vector<int> args;
};

struct CNode {
  Op op = Op::Atom;
  int a = -1, b = -1;  // children
  int symbol = -1;     // predicate id for atoms
  int slot = -1;       // variable slot for quantifiers
  std::vector<int> args;
};

/// Index-based form of a formula pair plus the digit layout of the
/// structures that interpret its symbols.
class PairKernel {
 public:
  PairKernel(const Formula& f1, const Formula& f2) {
    root1_ = compile(f1);
    root2_ = compile(f2);
  }

  bool has_functions() const { return !functions_.empty(); }

  /// Mixed-radix layout for domain size n.
  struct Layout {
    std::size_t n;
    std::vector<std::uint64_t> pred_offset;  // into bits
    std::vector<std::uint64_t> func_offset;  // into function values
    std::size_t bit_count = 0;
    std::size_t func_count = 0;
    std::uint64_t total = 1;  // saturating
  };

  Layout layout(std::size_t n) const {
    Layout l;
    l.n = n;
    l.total = ipow(n, constants_.size());
    for (const auto& p : predicates_) {
      l.pred_offset.push_back(l.bit_count);
      const auto cells = ipow(n, p.arity);
      l.bit_count += cells;
      l.total = sat_mul(l.total, ipow(2, cells));
    }
    for (const auto& f : functions_) {
      l.func_offset.push_back(l.func_count);
      const auto cells = ipow(n, f.arity);
      l.func_count += cells;
      l.total = sat_mul(l.total, ipow(n, cells));
    }
    return l;
  }

  struct Scratch {
    std::vector<std::uint32_t> consts;
    std::vector<std::uint8_t> bits;
    std::vector<std::uint32_t> funcs;
    std::vector<std::uint32_t> env;
  };

  Scratch make_scratch(const Layout& l) const {
    Scratch s;
    s.consts.resize(constants_.size());
    s.bits.resize(l.bit_count);
    s.funcs.resize(l.func_count);
    s.env.resize(slot_count_);
    return s;
  }

  /// Writes structure `index` of the exhaustive enumeration into `s`.
  void decode(const Layout& l, std::uint64_t index, Scratch& s) const {
    for (auto& c : s.consts) {
      c = static_cast<std::uint32_t>(index % l.n);
      index /= l.n;
    }
    for (auto& b : s.bits) {
      b = static_cast<std::uint8_t>(index & 1u);
      index >>= 1;
    }
    for (auto& f : s.funcs) {
      f = static_cast<std::uint32_t>(index % l.n);
      index /= l.n;
    }
  }

  /// Writes the `index`-th sampled structure into `s`.
  void sample(const Layout& l, std::uint64_t seed, std::uint64_t index, Scratch& s) const {
    std::uint64_t state = mix64(seed ^ mix64(l.n * 0x9e37ULL + index));
    auto draw = [&state] {
      state += 0x9e3779b97f4a7c15ULL;
      return mix64(state);
    };
    for (auto& c : s.consts) c = static_cast<std::uint32_t>(draw() % l.n);
    std::uint64_t word = 0;
    int left = 0;
    for (auto& b : s.bits) {
      if (left == 0) {
        word = draw();
        left = 64;
      }
      b = static_cast<std::uint8_t>(word & 1u);
      word >>= 1;
      --left;
    }
    for (auto& f : s.funcs) f = static_cast<std::uint32_t>(draw() % l.n);
  }

  bool distinguishes(const Layout& l, Scratch& s) const {
    return eval(root1_, l, s) != eval(root2_, l, s);
  }

  SigmaStructure materialize(const Layout& l, const Scratch& s) const {
    SigmaStructure out;
    out.domain_size = l.n;
    for (std::size_t i = 0; i < constants_.size(); ++i) out.constants[constants_[i]] = s.consts[i];
    for (std::size_t p = 0; p < predicates_.size(); ++p) {
      auto& rel = out.predicates[predicates_[p].name];
      const auto arity = predicates_[p].arity;
      const auto cells = ipow(l.n, arity);
      for (std::uint64_t cell = 0; cell < cells; ++cell) {
        if (!s.bits[l.pred_offset[p] + cell]) continue;
        rel.insert(unflatten(cell, arity, l.n));
      }
    }
    for (std::size_t f = 0; f < functions_.size(); ++f) {
      auto& table = out.functions[functions_[f].name];
      const auto arity = functions_[f].arity;
      const auto cells = ipow(l.n, arity);
      for (std::uint64_t cell = 0; cell < cells; ++cell)
        table[unflatten(cell, arity, l.n)] = s.funcs[l.func_offset[f] + cell];
    }
    return out;
  }

 private:
  static Tuple unflatten(std::uint64_t cell, std::size_t arity, std::size_t n) {
    Tuple t(arity);
    for (std::size_t i = arity; i > 0; --i) {
      t[i - 1] = static_cast<Element>(cell % n);
      cell /= n;
    }
    return t;
  }

  int intern(std::vector<SymbolInfo>& table, std::map<std::string, int>& ids,
             const std::string& name, std::size_t arity) {
    auto [it, inserted] = ids.emplace(name, static_cast<int>(table.size()));
    if (inserted) table.push_back({name, arity});
    return it->second;
  }

  int compile_term(const Term& t) {
    CTerm ct{t.kind(), -1, {}};
    switch (t.kind()) {
      case TermKind::Variable: {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
          if (it->first == t.name()) ct.index = it->second;
        if (ct.index < 0) throw UnsupportedConstruct("free variable '" + t.name() + "'");
        break;
      }
      case TermKind::Constant: {
        auto [it, inserted] = constant_ids_.emplace(t.name(), static_cast<int>(constants_.size()));
        if (inserted) constants_.push_back(t.name());
        ct.index = it->second;
        break;
      }
      case TermKind::Function:
        ct.index = intern(functions_, function_ids_, t.name(), t.args().size());
        for (const auto& a : t.args()) ct.args.push_back(compile_term(a));
        break;
    }
    terms_.push_back(std::move(ct));
    return static_cast<int>(terms_.size() - 1);
  }

  int compile(const Formula& f) {
    CNode node;
    node.op = Op::Atom;
    switch (f.kind()) {
      case FormulaKind::Atom:
        node.symbol = intern(predicates_, predicate_ids_, f.predicate(), f.args().size());
        for (const auto& a : f.args()) node.args.push_back(compile_term(a));
        break;
      case FormulaKind::Not:
        node.op = Op::Not;
        node.a = compile(f.operand());
        break;
      case FormulaKind::Binary:
        switch (f.connective()) {
          case fol::Connective::And: node.op = Op::And; break;
          case fol::Connective::Or: node.op = Op::Or; break;
          case fol::Connective::Implies: node.op = Op::Implies; break;
          case fol::Connective::Iff: node.op = Op::Iff; break;
        }
        node.a = compile(f.left());
        node.b = compile(f.right());
        break;
      case FormulaKind::Quantified:
        node.op = f.quantifier() == fol::Quantifier::Forall ? Op::Forall : Op::Exists;
        node.slot = static_cast<int>(slot_count_++);
        scope_.emplace_back(f.variable(), node.slot);
        node.a = compile(f.body());
        scope_.pop_back();
        break;
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size() - 1);
  }

  std::uint32_t eval_term(int id, const Layout& l, const Scratch& s) const {
    const auto& t = terms_[id];
    switch (t.kind) {
      case TermKind::Variable: return s.env[t.index];
      case TermKind::Constant: return s.consts[t.index];
      case TermKind::Function: {
        std::uint64_t cell = 0;
        for (int a : t.args) cell = cell * l.n + eval_term(a, l, s);
        return s.funcs[l.func_offset[t.index] + cell];
      }
    }
    return 0;
  }

  bool eval(int id, const Layout& l, Scratch& s) const {
    const auto& n = nodes_[id];
    switch (n.op) {
      case Op::Atom: {
        std::uint64_t cell = 0;
        for (int a : n.args) cell = cell * l.n + eval_term(a, l, s);
        return s.bits[l.pred_offset[n.symbol] + cell] != 0;
      }
      case Op::Not: return !eval(n.a, l, s);
      case Op::And: return eval(n.a, l, s) && eval(n.b, l, s);
      case Op::Or: return eval(n.a, l, s) || eval(n.b, l, s);
      case Op::Implies: return !eval(n.a, l, s) || eval(n.b, l, s);
      case Op::Iff: return eval(n.a, l, s) == eval(n.b, l, s);
      case Op::Forall:
      case Op::Exists: {
        const bool universal = n.op == Op::Forall;
        const auto saved = s.env[n.slot];
        bool result = universal;
        for (std::uint32_t d = 0; d < l.n; ++d) {
          s.env[n.slot] = d;
          if (eval(n.a, l, s) != universal) {
            result = !universal;
            break;
          }
        }
        s.env[n.slot] = saved;
        return result;
      }
    }
    return false;
  }

  std::vector<std::string> constants_;
  std::map<std::string, int> constant_ids_;
  std::vector<SymbolInfo> predicates_;
  std::map<std::string, int> predicate_ids_;
  std::vector<SymbolInfo> functions_;
  std::map<std::string, int> function_ids_;
  std::vector<CTerm> terms_;
  std::vector<CNode> nodes_;
  std::vector<std::pair<std::string, int>> scope_;
  std::size_t slot_count_ = 0;
  int root1_ = -1;
  int root2_ = -1;
};

/// One domain size of the search: either the exhaustive index range
/// [0, count) or `count` sampled structures.
struct Phase {
  std::size_t n;
  bool sampled;
  std::uint64_t count;
};

std::vector<Phase> plan(const PairKernel& k, const BruteForceOptions& opts) {
  std::vector<Phase> phases;
  std::uint64_t remaining = opts.budget;
  std::size_t max_n = opts.max_domain;
  if (k.has_functions()) max_n = std::min(max_n, kFunctionDomainCap);
  for (std::size_t n = 1; n <= max_n && remaining > 0; ++n) {
    const auto total = k.layout(n).total;
    if (total <= remaining) {
      phases.push_back({n, false, total});
      remaining -= total;
    } else {
      const std::uint64_t share = remaining / (max_n - n + 1);
      const std::uint64_t count = std::max<std::uint64_t>(share, 1);
      phases.push_back({n, true, count});
      remaining -= count;
    }
  }
  return phases;
}

void check_inputs(const Formula& f1, const Formula& f2, const fol::Signature& sig,
                  const BruteForceOptions& opts) {
  if (opts.budget < 1) throw BudgetExceeded("brute-force budget must be at least 1");
  if (opts.max_domain < 1) throw std::invalid_argument("max_domain must be at least 1");
  fol::check_well_formed(f1, sig);
  fol::check_well_formed(f2, sig);
  if (!fol::is_closed(f1) || !fol::is_closed(f2))
    throw UnsupportedConstruct("equivalence check requires closed formulas");
}

EquivVerdict refuted(const PairKernel& k, const PairKernel::Layout& l, const Phase& ph,
                     std::uint64_t index, const BruteForceOptions& opts, const fol::Signature& sig,
                     std::uint64_t checked) {
  auto s = k.make_scratch(l);
  if (ph.sampled) k.sample(l, opts.seed, index, s);
  else k.decode(l, index, s);
  EquivVerdict v;
  v.kind = VerdictKind::NotEquivalent;
  v.method = "brute_force";
  v.witness = k.materialize(l, s);
  v.witness->complete_for(sig);
  v.structures_checked = checked;
  v.detail = "distinguishing structure of size " + std::to_string(l.n);
  return v;
}

EquivVerdict exhausted(std::uint64_t checked, std::size_t max_n) {
  EquivVerdict v;
  v.kind = VerdictKind::Unknown;
  v.method = "brute_force";
  v.reason = UnknownReason::BoundExhausted;
  v.structures_checked = checked;
  v.detail = "no distinguishing structure up to domain size " + std::to_string(max_n);
  return v;
}

}  // namespace

EquivVerdict brute_force_check_serial(const Formula& f1, const Formula& f2,
                                      const fol::Signature& sig, const BruteForceOptions& opts) {
  check_inputs(f1, f2, sig, opts);
  const PairKernel kernel(f1, f2);
  std::uint64_t checked = 0;
  std::size_t last_n = 0;
  for (const auto& ph : plan(kernel, opts)) {
    const auto l = kernel.layout(ph.n);
    auto s = kernel.make_scratch(l);
    last_n = ph.n;
    for (std::uint64_t i = 0; i < ph.count; ++i) {
      if (ph.sampled) kernel.sample(l, opts.seed, i, s);
      else kernel.decode(l, i, s);
      ++checked;
      if (kernel.distinguishes(l, s)) return refuted(kernel, l, ph, i, opts, sig, checked);
    }
  }
  return exhausted(checked, last_n);
}

EquivVerdict brute_force_check(const Formula& f1, const Formula& f2, const fol::Signature& sig,
                               const BruteForceOptions& opts) {
  check_inputs(f1, f2, sig, opts);
  const PairKernel kernel(f1, f2);
  std::uint64_t checked = 0;
  std::size_t last_n = 0;
  for (const auto& ph : plan(kernel, opts)) {
    const auto l = kernel.layout(ph.n);
    last_n = ph.n;
    // Blocks keep the early exit cheap; the minimum over a block is the
    // same index the serial scan stops at.
    for (std::uint64_t lo = 0; lo < ph.count; lo += kBlock) {
      const std::uint64_t hi = std::min(ph.count, lo + kBlock);
      std::uint64_t found = kSaturated;
#pragma omp parallel
      {
        auto s = kernel.make_scratch(l);
#pragma omp for schedule(static) reduction(min : found)
        for (std::int64_t i = static_cast<std::int64_t>(lo); i < static_cast<std::int64_t>(hi);
             ++i) {
          const auto idx = static_cast<std::uint64_t>(i);
          if (idx > found) continue;
          if (ph.sampled) kernel.sample(l, opts.seed, idx, s);
          else kernel.decode(l, idx, s);
          if (kernel.distinguishes(l, s)) found = std::min(found, idx);
        }
      }
      if (found != kSaturated)
        return refuted(kernel, l, ph, found, opts, sig, checked + (found - lo) + 1);
      checked += hi - lo;
    }
  }
  return exhausted(checked, last_n);
}

}  // namespace folbench::equiv
