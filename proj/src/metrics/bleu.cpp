#include "folbench/metrics/bleu.hpp"

#include <cctype>
#include <cmath>
#include <map>

#include "folbench/fol/printer.hpp"

namespace folbench::metrics {

namespace {

bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xe) return 3;
  if ((lead >> 3) == 0x1e) return 4;
  return 1;
}

using Ngram = std::vector<std::string>;

std::map<Ngram, std::size_t> ngram_counts(const std::vector<std::string>& toks, std::size_t n) {
  std::map<Ngram, std::size_t> out;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) ++out[Ngram(toks.begin() + i, toks.begin() + i + n)];
  return out;
}

}  // namespace

std::vector<std::string> formula_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (ident_char(c)) {
      const auto start = i;
      while (i < text.size() && ident_char(static_cast<unsigned char>(text[i]))) ++i;
      out.emplace_back(text.substr(start, i - start));
    } else {
      const auto len = std::min(utf8_length(c), text.size() - i);
      out.emplace_back(text.substr(i, len));
      i += len;
    }
  }
  return out;
}

double bleu(const std::vector<std::string>& reference, const std::vector<std::string>& candidate) {
  if (candidate.empty()) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto cand = ngram_counts(candidate, n);
    const auto ref = ngram_counts(reference, n);
    std::size_t matched = 0, total = 0;
    for (const auto& [g, count] : cand) {
      total += count;
      if (auto it = ref.find(g); it != ref.end()) matched += std::min(count, it->second);
    }
    if (matched == 0 || total == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matched) / static_cast<double>(total));
  }
  const auto c = static_cast<double>(candidate.size());
  const auto r = static_cast<double>(reference.size());
  const double bp = c < r ? std::exp(1.0 - r / c) : 1.0;
  return bp * std::exp(log_sum / 4.0);
}

double bleu_formula(const fol::Formula& reference, const fol::Formula& candidate) {
  return bleu(formula_tokens(fol::print_formula(reference)),
              formula_tokens(fol::print_formula(candidate)));
}

}  // namespace folbench::metrics
