#include "folbench/metrics/le_score.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "folbench/errors.hpp"

namespace folbench::metrics {

using fol::Formula;
using fol::FormulaKind;

namespace {

constexpr std::size_t kMaxVariables = 24;

void collect_predicates(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      if (std::find(out.begin(), out.end(), f.predicate()) == out.end()) out.push_back(f.predicate());
      return;
    case FormulaKind::Not: collect_predicates(f.operand(), out); return;
    case FormulaKind::Quantified: collect_predicates(f.body(), out); return;
    case FormulaKind::Binary:
      collect_predicates(f.left(), out);
      collect_predicates(f.right(), out);
      return;
  }
}

// Quantifiers are simply skipped: this is the propositional reading.
bool prop_eval(const Formula& f, const std::map<std::string, bool>& v) {
  switch (f.kind()) {
    case FormulaKind::Atom: return v.at(f.predicate());
    case FormulaKind::Not: return !prop_eval(f.operand(), v);
    case FormulaKind::Quantified: return prop_eval(f.body(), v);
    case FormulaKind::Binary: {
      const bool l = prop_eval(f.left(), v), r = prop_eval(f.right(), v);
      switch (f.connective()) {
        case fol::Connective::And: return l && r;
        case fol::Connective::Or: return l || r;
        case fol::Connective::Implies: return !l || r;
        case fol::Connective::Iff: return l == r;
      }
    }
  }
  return false;
}

template <class Seq>
std::size_t lcs(const Seq& a, const Seq& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

template <class Seq>
double lcs_ratio(const Seq& a, const Seq& b) {
  const auto total = a.size() + b.size();
  if (total == 0) return 1.0;
  return 2.0 * static_cast<double>(lcs(a, b)) / static_cast<double>(total);
}

}  // namespace

PredicateMatching PredicateMatching::inverted() const {
  PredicateMatching m;
  for (const auto& [l, r] : pairs) m.pairs[r] = l;
  m.unmatched_left = unmatched_right;
  m.unmatched_right = unmatched_left;
  return m;
}

std::string LeTable::render() const {
  std::size_t width = 7;
  for (const auto& v : variables) width = std::max(width, v.size());
  std::string out;
  const auto row = [&](const std::string& name, const std::vector<bool>& bits) {
    out += name + std::string(width - name.size(), ' ');
    for (bool b : bits) out += b ? " 1" : " 0";
    out += '\n';
  };
  for (std::size_t i = 0; i < variables.size(); ++i) row(variables[i], assignment[i]);
  row("phi", left);
  row("phi'", right);
  return out;
}

std::vector<std::string> predicates_in_order(const Formula& f) {
  std::vector<std::string> out;
  collect_predicates(f, out);
  return out;
}

LeTable le_table(const Formula& f1, const Formula& f2, const PredicateMatching& m) {
  const auto p1 = predicates_in_order(f1), p2 = predicates_in_order(f2);
  const std::set<std::string> left_unmatched(m.unmatched_left.begin(), m.unmatched_left.end());
  const std::set<std::string> right_unmatched(m.unmatched_right.begin(), m.unmatched_right.end());

  std::set<std::string> targets;
  for (const auto& [l, r] : m.pairs)
    if (!targets.insert(r).second) throw MatchingIncomplete("'" + r + "' is matched twice");

  // variable name -> (left symbol, right symbol); "" marks a dummy.
  LeTable t;
  std::vector<std::pair<std::string, std::string>> vars;
  for (const auto& p : p1) {
    if (auto it = m.pairs.find(p); it != m.pairs.end()) vars.emplace_back(p, it->second);
    else if (left_unmatched.count(p)) vars.emplace_back(p, "");
    else throw MatchingIncomplete("predicate '" + p + "' of the first formula is not covered");
  }
  for (const auto& p : p2) {
    if (targets.count(p)) continue;
    if (right_unmatched.count(p)) vars.emplace_back("", p);
    else throw MatchingIncomplete("predicate '" + p + "' of the second formula is not covered");
  }
  if (vars.size() > kMaxVariables)
    throw UnsupportedConstruct("too many predicates for a truth table: " + std::to_string(vars.size()));

  for (const auto& [l, r] : vars) t.variables.push_back((l.empty() ? "Dummy" : l) + "-" + (r.empty() ? "Dummy" : r));

  const std::size_t n = vars.size(), cols = std::size_t{1} << n;
  t.assignment.assign(n, std::vector<bool>(cols));
  t.left.resize(cols);
  t.right.resize(cols);
  std::map<std::string, bool> v1, v2;
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      const bool bit = (c >> (n - 1 - i)) & 1u;
      t.assignment[i][c] = bit;
      if (!vars[i].first.empty()) v1[vars[i].first] = bit;
      if (!vars[i].second.empty()) v2[vars[i].second] = bit;
    }
    t.left[c] = prop_eval(f1, v1);
    t.right[c] = prop_eval(f2, v2);
    if (t.left[c] == t.right[c]) ++t.agreeing;
  }
  return t;
}

double le_score(const Formula& f1, const Formula& f2, const PredicateMatching& m) {
  return le_table(f1, f2, m).score();
}

std::vector<std::string> name_tokens(const std::string& name) {
  std::vector<std::string> out;
  std::string cur;
  const auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  const auto lower = [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); };
  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto c = static_cast<unsigned char>(name[i]);
    if (c == '_' || c == '-' || std::isspace(c)) {
      flush();
      continue;
    }
    if (!cur.empty()) {
      const auto prev = static_cast<unsigned char>(name[i - 1]);
      const bool next_lower = i + 1 < name.size() && std::islower(static_cast<unsigned char>(name[i + 1]));
      if ((std::isupper(c) && (std::islower(prev) || std::isdigit(prev))) ||
          (std::isupper(c) && std::isupper(prev) && next_lower) ||
          (std::isdigit(c) != 0) != (std::isdigit(prev) != 0))
        flush();
    }
    cur += lower(name[i]);
  }
  flush();
  return out;
}

double token_similarity(const std::string& a, const std::string& b) {
  return lcs_ratio(name_tokens(a), name_tokens(b));
}

double char_similarity(const std::string& a, const std::string& b) {
  std::string la, lb;
  for (char c : a) la += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (char c : b) lb += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return lcs_ratio(la, lb);
}

PredicateMatching default_matching(const Formula& f1, const Formula& f2) {
  auto left = predicates_in_order(f1), right = predicates_in_order(f2);
  PredicateMatching m;
  for (auto it = left.begin(); it != left.end();) {
    auto r = std::find(right.begin(), right.end(), *it);
    if (r != right.end()) {
      m.pairs[*it] = *it;
      right.erase(r);
      it = left.erase(it);
    } else {
      ++it;
    }
  }

  struct Cand {
    double token, chars;
    std::string l, r;
  };
  std::vector<Cand> cands;
  for (const auto& l : left)
    for (const auto& r : right) {
      const double s = token_similarity(l, r);
      if (s > 0.5) cands.push_back({s, char_similarity(l, r), l, r});
    }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::tie(b.token, b.chars, a.l, a.r) < std::tie(a.token, a.chars, b.l, b.r);
  });
  std::set<std::string> used_l, used_r;
  for (const auto& c : cands) {
    if (used_l.count(c.l) || used_r.count(c.r)) continue;
    m.pairs[c.l] = c.r;
    used_l.insert(c.l);
    used_r.insert(c.r);
  }
  for (const auto& l : left)
    if (!used_l.count(l)) m.unmatched_left.push_back(l);
  for (const auto& r : right)
    if (!used_r.count(r)) m.unmatched_right.push_back(r);
  return m;
}

}  // namespace folbench::metrics
