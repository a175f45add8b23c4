#include "folbench/equiv/solver.hpp"

#include <algorithm>
#include <cctype>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <system_error>

#include "folbench/equiv/smtlib.hpp"
#include "folbench/equiv/subprocess.hpp"
#include "folbench/errors.hpp"
#include "folbench/rng.hpp"

namespace folbench::equiv {

// ---------------------------------------------------------------------------
// Concurrency cap

namespace {

class ProcessLimiter {
 public:
  void acquire() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [this] { return running_ < limit_; });
    ++running_;
  }
  void release() {
    {
      std::lock_guard lock(mu_);
      --running_;
    }
    cv_.notify_one();
  }
  void set_limit(std::size_t n) {
    {
      std::lock_guard lock(mu_);
      limit_ = n == 0 ? 1 : n;
    }
    cv_.notify_all();
  }
  std::size_t limit() const {
    std::lock_guard lock(mu_);
    return limit_;
  }

 private:
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::size_t running_ = 0;
  std::size_t limit_ = 8;
};

ProcessLimiter& limiter() {
  static ProcessLimiter instance;
  return instance;
}

struct LimiterSlot {
  LimiterSlot() { limiter().acquire(); }
  ~LimiterSlot() { limiter().release(); }
  LimiterSlot(const LimiterSlot&) = delete;
  LimiterSlot& operator=(const LimiterSlot&) = delete;
};

// ---------------------------------------------------------------------------
// S-expressions

struct SExpr {
  bool atom = true;
  std::string text;
  std::vector<SExpr> items;

  bool is(const char* s) const { return atom && text == s; }
};

class SExprReader {
 public:
  explicit SExprReader(const std::string& s) : s_(s) {}

  bool at_end() {
    skip();
    return i_ >= s_.size();
  }

  SExpr read() {
    skip();
    if (i_ >= s_.size()) throw std::runtime_error("unexpected end of s-expression");
    if (s_[i_] == '(') {
      ++i_;
      SExpr list;
      list.atom = false;
      for (;;) {
        skip();
        if (i_ >= s_.size()) throw std::runtime_error("unbalanced s-expression");
        if (s_[i_] == ')') {
          ++i_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    if (s_[i_] == ')') throw std::runtime_error("unexpected ')'");
    SExpr a;
    if (s_[i_] == '|') {
      const auto end = s_.find('|', i_ + 1);
      if (end == std::string::npos) throw std::runtime_error("unterminated |symbol|");
      a.text = s_.substr(i_ + 1, end - i_ - 1);
      i_ = end + 1;
      return a;
    }
    if (s_[i_] == '"') {
      std::size_t j = i_ + 1;
      while (j < s_.size() && !(s_[j] == '"' && (j + 1 >= s_.size() || s_[j + 1] != '"')))
        j += s_[j] == '"' ? 2 : 1;
      a.text = s_.substr(i_, j + 1 - i_);
      i_ = j + 1;
      return a;
    }
    const auto start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
           s_[i_] != ')' && s_[i_] != ';')
      ++i_;
    a.text = s_.substr(start, i_ - start);
    return a;
  }

 private:
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == ';') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Model evaluation

struct Value {
  bool is_bool = true;
  bool b = false;
  Element e = 0;
  friend bool operator==(const Value&, const Value&) = default;
};

struct Definition {
  std::vector<std::string> params;
  SExpr body;
};

class ModelEvaluator {
 public:
  ModelEvaluator(std::map<std::string, Element> universe, std::map<std::string, Definition> defs)
      : universe_(std::move(universe)), defs_(std::move(defs)) {}

  bool defines(const std::string& name) const { return defs_.count(name) > 0; }

  Value call(const std::string& name, const std::vector<Value>& args) {
    const auto& d = defs_.at(name);
    if (d.params.size() != args.size()) throw std::runtime_error("arity mismatch in model");
    if (++depth_ > 256) throw std::runtime_error("model recursion too deep");
    std::map<std::string, Value> env;
    for (std::size_t i = 0; i < args.size(); ++i) env[d.params[i]] = args[i];
    Value v = eval(d.body, env);
    --depth_;
    return v;
  }

 private:
  Value eval(const SExpr& x, const std::map<std::string, Value>& env) {
    if (x.atom) {
      if (x.text == "true") return {true, true, 0};
      if (x.text == "false") return {true, false, 0};
      if (auto it = env.find(x.text); it != env.end()) return it->second;
      if (auto it = universe_.find(x.text); it != universe_.end()) return {false, false, it->second};
      if (defines(x.text)) return call(x.text, {});
      throw std::runtime_error("unknown model symbol " + x.text);
    }
    if (x.items.empty() || !x.items[0].atom) throw std::runtime_error("unsupported model term");
    const auto& head = x.items[0].text;
    const auto arg = [&](std::size_t i) { return eval(x.items.at(i), env); };
    const auto n = x.items.size() - 1;
    if (head == "ite") return arg(1).b ? arg(2) : arg(3);
    if (head == "not") return {true, !arg(1).b, 0};
    if (head == "and") {
      for (std::size_t i = 1; i <= n; ++i)
        if (!arg(i).b) return {true, false, 0};
      return {true, true, 0};
    }
    if (head == "or") {
      for (std::size_t i = 1; i <= n; ++i)
        if (arg(i).b) return {true, true, 0};
      return {true, false, 0};
    }
    if (head == "=>") return {true, !arg(1).b || arg(2).b, 0};
    if (head == "xor") return {true, arg(1).b != arg(2).b, 0};
    if (head == "=") {
      const Value first = arg(1);
      for (std::size_t i = 2; i <= n; ++i)
        if (!(arg(i) == first)) return {true, false, 0};
      return {true, true, 0};
    }
    if (head == "distinct") {
      std::vector<Value> vs;
      for (std::size_t i = 1; i <= n; ++i) vs.push_back(arg(i));
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (vs[i] == vs[j]) return {true, false, 0};
      return {true, true, 0};
    }
    if (head == "let") {
      auto inner = env;
      for (const auto& binding : x.items.at(1).items)
        inner[binding.items.at(0).text] = eval(binding.items.at(1), env);
      return eval(x.items.at(2), inner);
    }
    if (head == "!") return arg(1);
    if (defines(head)) {
      std::vector<Value> args;
      for (std::size_t i = 1; i <= n; ++i) args.push_back(arg(i));
      return call(head, args);
    }
    throw std::runtime_error("unsupported model operator " + head);
  }

  std::map<std::string, Element> universe_;
  std::map<std::string, Definition> defs_;
  int depth_ = 0;
};

void for_each_tuple(std::size_t n, std::size_t arity, const auto& fn) {
  Tuple t(arity, 0);
  for (;;) {
    fn(t);
    if (arity == 0) return;
    std::size_t i = arity;
    for (;;) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return;
    }
  }
}

bool is_element_name(const std::string& s) { return s.rfind("U!val!", 0) == 0; }

std::size_t element_rank(const std::string& s) {
  if (!is_element_name(s)) return std::numeric_limits<std::size_t>::max();
  try {
    return std::stoul(s.substr(6));
  } catch (const std::exception&) {
    return std::numeric_limits<std::size_t>::max();
  }
}

void collect_elements(const SExpr& x, std::set<std::string>& out) {
  if (x.atom) {
    if (is_element_name(x.text)) out.insert(x.text);
    return;
  }
  for (const auto& i : x.items) collect_elements(i, out);
}

std::vector<std::string> default_args_for(const std::string& path) {
  const auto base = std::filesystem::path(path).filename().string();
  if (base.rfind("z3", 0) == 0) return {"-in"};
  if (base.rfind("cvc5", 0) == 0 || base.rfind("cvc4", 0) == 0) return {"--lang=smt2"};
  return {};
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace

SolverConfig SolverConfig::from_environment() {
  SolverConfig cfg;
  if (const char* p = std::getenv("FOLBENCH_SOLVER"); p && *p) cfg.path = p;
  return cfg;
}

void set_max_concurrent_solvers(std::size_t n) { limiter().set_limit(n); }
std::size_t max_concurrent_solvers() { return limiter().limit(); }

bool solver_available(const SolverConfig& cfg) { return find_executable(cfg.path).has_value(); }

std::optional<SigmaStructure> read_smt_model(const std::string& model_text,
                                             const fol::Signature& sig) {
  try {
    SExprReader reader(model_text);
    std::vector<SExpr> entries;
    while (!reader.at_end()) {
      SExpr top = reader.read();
      if (top.atom) continue;
      std::size_t start = 0;
      if (!top.items.empty() && top.items[0].is("model")) start = 1;
      for (std::size_t i = start; i < top.items.size(); ++i) entries.push_back(top.items[i]);
    }

    std::map<std::string, Element> universe;
    std::map<std::string, Definition> defs;
    for (const auto& e : entries) {
      if (e.atom || e.items.empty()) continue;
      const auto& head = e.items[0];
      if (head.is("declare-fun") && e.items.size() == 4 && !e.items[2].atom &&
          e.items[2].items.empty() && e.items[3].is("U")) {
        universe.emplace(e.items[1].text, universe.size());
      } else if (head.is("define-fun") && e.items.size() == 5) {
        Definition d;
        for (const auto& p : e.items[2].items) d.params.push_back(p.items.at(0).text);
        d.body = e.items[4];
        defs[e.items[1].text] = std::move(d);
      }
    }
    // z3 omits the universe block when no element is named apart from the
    // defaults, so element names are also collected from the definitions.
    std::set<std::string> names;
    for (const auto& [name, _] : universe) names.insert(name);
    for (const auto& [_, d] : defs) collect_elements(d.body, names);
    std::vector<std::string> ordered(names.begin(), names.end());
    std::sort(ordered.begin(), ordered.end(), [](const std::string& a, const std::string& b) {
      return std::pair(element_rank(a), a) < std::pair(element_rank(b), b);
    });
    universe.clear();
    for (const auto& n : ordered) universe.emplace(n, universe.size());
    const std::size_t domain = universe.empty() ? 1 : universe.size();

    SigmaStructure s;
    s.domain_size = domain;
    ModelEvaluator ev(universe, defs);
    for (const auto& c : sig.constants()) {
      const auto sym = smt_symbol(SmtSymbolKind::Constant, c);
      s.constants[c] = ev.defines(sym) ? ev.call(sym, {}).e : 0;
    }
    for (const auto& [p, arity] : sig.predicates()) {
      const auto sym = smt_symbol(SmtSymbolKind::Predicate, p);
      auto& rel = s.predicates[p];
      if (!ev.defines(sym)) continue;
      for_each_tuple(s.domain_size, arity, [&](const Tuple& t) {
        std::vector<Value> args;
        for (auto x : t) args.push_back({false, false, x});
        if (ev.call(sym, args).b) rel.insert(t);
      });
    }
    for (const auto& [f, arity] : sig.functions()) {
      const auto sym = smt_symbol(SmtSymbolKind::Function, f);
      auto& table = s.functions[f];
      for_each_tuple(s.domain_size, arity, [&](const Tuple& t) {
        std::vector<Value> args;
        for (auto x : t) args.push_back({false, false, x});
        table[t] = ev.defines(sym) ? ev.call(sym, args).e : 0;
      });
    }
    return s;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

EquivVerdict solver_check(const fol::Formula& f1, const fol::Formula& f2,
                          const fol::Signature& sig, const SolverConfig& cfg,
                          const std::string& audit_name) {
  const auto exe = find_executable(cfg.path);
  if (!exe) throw SolverNotFound("solver executable '" + cfg.path + "' not found");

  const std::string script = emit_smtlib(f1, f2, sig);
  if (cfg.keep_smt_dir) {
    std::filesystem::create_directories(*cfg.keep_smt_dir);
    const auto name = audit_name.empty() ? hex64(fnv1a64(script)) : audit_name;
    std::ofstream(*cfg.keep_smt_dir / (name + ".smt2")) << script;
  }

  std::vector<std::string> args = cfg.args.empty() ? default_args_for(*exe) : cfg.args;
  args.insert(args.end(), cfg.extra_args.begin(), cfg.extra_args.end());
  const std::string input = cfg.request_model ? script + "(get-model)\n" : script;

  ProcessResult run;
  {
    LimiterSlot slot;
    try {
      run = run_process(*exe, args, input, std::chrono::milliseconds(cfg.timeout_ms));
    } catch (const std::system_error& e) {
      throw SolverCrashed(std::string("cannot run solver: ") + e.what(), {});
    }
  }

  EquivVerdict v;
  v.method = "solver";
  if (run.timed_out) {
    v.kind = VerdictKind::Unknown;
    v.reason = UnknownReason::Timeout;
    v.detail = "solver exceeded " + std::to_string(cfg.timeout_ms) + " ms";
    return v;
  }

  SExprReader reader(run.out);
  std::string answer;
  try {
    if (!reader.at_end()) {
      SExpr first = reader.read();
      if (first.atom) answer = first.text;
    }
  } catch (const std::exception&) {
  }

  if (answer == "unsat") {
    v.kind = VerdictKind::Equivalent;
    return v;
  }
  if (answer == "unknown" || answer == "timeout") {
    v.kind = VerdictKind::Unknown;
    v.reason = answer == "timeout" ? UnknownReason::Timeout : UnknownReason::SolverUnknown;
    return v;
  }
  if (answer != "sat") {
    throw SolverCrashed("solver produced no sat/unsat/unknown answer (exit code " +
                            std::to_string(run.exit_code) + "): " + run.out.substr(0, 200),
                        run.err);
  }

  v.kind = VerdictKind::NotEquivalent;
  if (cfg.request_model) {
    const auto pos = run.out.find("sat");
    auto model = read_smt_model(run.out.substr(pos + 3), sig);
    if (model) {
      const bool a = eval(f1, *model), b = eval(f2, *model);
      if (a != b) v.witness = std::move(model);
      else v.detail = "solver model did not separate the formulas";
    } else {
      v.detail = "solver model unavailable";
    }
  } else {
    v.detail = "solver model not requested";
  }
  return v;
}

}  // namespace folbench::equiv
