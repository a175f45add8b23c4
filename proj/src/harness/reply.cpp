#include "folbench/harness/reply.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "folbench/errors.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/fol/parser.hpp"

namespace folbench::harness {

namespace {

std::optional<nlohmann::json> try_json(const std::string& s) {
  auto j = nlohmann::json::parse(s, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

// First balanced {...} block, honouring JSON string quoting.
std::optional<std::string> first_object_block(const std::string& s) {
  for (std::size_t start = s.find('{'); start != std::string::npos; start = s.find('{', start + 1)) {
    int depth = 0;
    bool in_str = false;
    for (std::size_t i = start; i < s.size(); ++i) {
      const char c = s[i];
      if (in_str) {
        if (c == '\\') ++i;
        else if (c == '"') in_str = false;
        continue;
      }
      if (c == '"') in_str = true;
      else if (c == '{') ++depth;
      else if (c == '}' && --depth == 0) {
        auto block = s.substr(start, i - start + 1);
        if (try_json(block)) return block;
        break;
      }
    }
  }
  return std::nullopt;
}

std::optional<fol::Formula> parse_closed(const std::string& text, const fol::Signature& sig,
                                         std::string* error) {
  try {
    auto f = fol::parse_formula(text, sig);
    if (!fol::is_closed(f)) {
      if (error) *error = "formula has free variables";
      return std::nullopt;
    }
    return f;
  } catch (const Error& e) {
    if (error) *error = std::string(e.name()) + ": " + e.what();
    return std::nullopt;
  }
}

std::string trim_wrapping(std::string s) {
  const std::string junk = " \t\r\n`'\".;:";
  const auto b = s.find_first_not_of(junk);
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(junk);
  return s.substr(b, e - b + 1);
}

std::vector<long long> integers_in(const std::string& s) {
  static const std::regex re("-?\\d+");
  std::vector<long long> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it) {
    try {
      out.push_back(std::stoll(it->str()));
    } catch (const std::out_of_range&) {
      out.push_back(-1);
    }
  }
  return out;
}

}  // namespace

StructuredReply parse_structured_reply(const std::string& raw) {
  StructuredReply r;
  auto j = try_json(raw);
  if (!j || !j->is_object()) {
    if (auto block = first_object_block(raw)) {
      j = try_json(*block);
      r.from_embedded_block = true;
    }
  }
  if (!j || !j->is_object()) return r;
  r.object = *j;
  if (j->contains("answer")) r.answer = (*j)["answer"];
  return r;
}

FormulaExtraction extract_formula(const std::string& text, const fol::Signature& sig) {
  FormulaExtraction out;
  const auto direct = trim_wrapping(text);
  if (auto f = parse_closed(direct, sig, &out.error)) {
    out.formula = std::move(f);
    out.text = direct;
    return out;
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t best_len = 0;
  while (std::getline(lines, line)) {
    std::vector<std::size_t> starts, ends;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      starts.push_back(i);
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      ends.push_back(i);
    }
    for (std::size_t a = 0; a < starts.size(); ++a) {
      for (std::size_t b = starts.size(); b-- > a;) {
        const auto len = ends[b] - starts[a];
        if (len <= best_len) break;
        auto candidate = trim_wrapping(line.substr(starts[a], len));
        if (candidate.empty()) continue;
        if (auto f = parse_closed(candidate, sig, nullptr)) {
          best_len = len;
          out.formula = std::move(f);
          out.text = candidate;
          break;
        }
      }
    }
  }
  if (out.formula) {
    out.fallback = true;
    out.error.clear();
  } else {
    out.text = direct;
  }
  return out;
}

std::optional<long long> parse_position_answer(const nlohmann::json& answer) {
  if (answer.is_number_integer()) return answer.get<long long>();
  if (answer.is_number_float()) {
    const double d = answer.get<double>();
    if (d == static_cast<double>(static_cast<long long>(d))) return static_cast<long long>(d);
    return std::nullopt;
  }
  if (answer.is_string()) {
    const auto ints = integers_in(answer.get<std::string>());
    if (ints.size() == 1) return ints.front();
  }
  return std::nullopt;
}

std::optional<std::vector<long long>> parse_ranking_answer(const nlohmann::json& answer) {
  if (answer.is_string()) {
    auto ints = integers_in(answer.get<std::string>());
    if (ints.empty()) return std::nullopt;
    return ints;
  }
  if (!answer.is_array()) return std::nullopt;
  std::vector<long long> out;
  for (const auto& e : answer) {
    auto v = parse_position_answer(e);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

}  // namespace folbench::harness
