#include "folbench/harness/prompts.hpp"

#include "folbench/errors.hpp"

namespace folbench::harness {

using transform::CandidateSet;
using transform::Variant;

namespace {

// Prompt texts 1-6. Keep them byte for byte, typos included. Placeholders use the
// <\name\> delimiters.

constexpr const char* kTemplate1 =
    "You are an expert evaluator specializing in translating natural language sentences into a "
    "logical formalism. Your task is to formalize a given sentence in First Order Logic (FOL).\n"
    "\n"
    "Instructions:\n"
    "You can use the following symbols: \n"
    "-  logical symbols: ∀ (for all), ∃ (exists), → (implies), ↔ (is equivalent to), ∧ (and), "
    "∨ (or), ¬ (not)\n"
    "- predicate symbols: <\\predicate_symbols\\>\n"
    "- contant symbols: <\\constant_symbols\\>\n"
    "- variable symbols: x,y,z,...\n"
    "- non logical symbols: parenthesis ()\n"
    "\n"
    "Output Format:\n"
    "Return the First Order Logic sentence that best represents the meaning of the given sentence.\n"
    "\n"
    "Input Format:\n"
    "Sentence: {sentence}\n";

constexpr const char* kTemplate2 = "Sentence: <\\sentence\\>";

constexpr const char* kTemplate3 =
    "You are an expert evaluator specializing in semantic similarity assessment. Your task is to "
    "identify the rephrasing that best preserves the original meaning of a given sentence.\n"
    "Instructions:\n"
    "\n"
    "- You will receive one original sentence followed by multiple rephrased versions\n"
    "- Evaluate each rephrasing based solely on semantic/logic equivalence (meaning preservation)\n"
    "- Ignore differences in grammar, syntax, word order, or writing style\n"
    "- Select and return the rephrasing that most accurately conveys the same meaning as the "
    "original sentence\n"
    "\n"
    "Evaluation Criteria:\n"
    "\n"
    "- Prioritize semantic accuracy over grammatical correctness\n"
    "- Focus on whether the logical meaning is the same or not\n"
    "\n"
    "Output Format:\n"
    "Return only the  number of the selected rephrasing that best matches the original sentence's "
    "meaning.\n"
    "\n"
    "Input Format:\n"
    "Sentence: {sentence}\n"
    "\n"
    "Rephrasing 1: {rephrasing_1}\n"
    "Rephrasing 2: {rephrasing_2}\n"
    "...\n"
    "Rephrasing n: {rephrasing_n}\n";

constexpr const char* kTemplate3Fol =
    "You are an expert evaluator specializing in semantic similarity assessment. Your task is to "
    "identify the First Order Logic formula that best preserves the original meaning of a given "
    "sentence.\n"
    "Instructions:\n"
    "\n"
    "- You will receive one original sentence followed by multiple First Order Logic formulas\n"
    "- Evaluate each formula based solely on semantic/logic equivalence (meaning preservation)\n"
    "- Ignore differences in syntax, variable names, or writing style\n"
    "- Select and return the formula that most accurately conveys the same meaning as the "
    "original sentence\n"
    "\n"
    "Evaluation Criteria:\n"
    "\n"
    "- Prioritize semantic accuracy over syntactic form\n"
    "- Focus on whether the logical meaning is the same or not\n"
    "\n"
    "Output Format:\n"
    "Return only the  number of the selected formula that best matches the original sentence's "
    "meaning.\n"
    "\n"
    "Input Format:\n"
    "Sentence: {sentence}\n"
    "\n"
    "Formula 1: {formula_1}\n"
    "Formula 2: {formula_2}\n"
    "...\n"
    "Formula n: {formula_n}\n";

constexpr const char* kTemplate4 = "Sentence: <\\reference\\>\n<\\candidates\\>";

constexpr const char* kTemplate5 =
    "You are an expert evaluator specializing in ranking some NL sentences according to their "
    "semantic similarity. You will be given a reference and other sentences; your task is to rank "
    "these sentences depending on whether they convey the same meaning of the reference or not.\n"
    "\n"
    "Instructions:\n"
    "- Ignore difference in grammar, syntax, style, or word order. You are only interested in the "
    "semantic behind the sentences. It is possible that two sentences have a different logical "
    "structure but they convey the same logical meaning and this is the only thing you have to "
    "focus on;\n"
    "- If one of the sentences is equivalent to the reference, it should be ranked first;\n"
    "- If one of the sentences is equivalent to the negation of the reference, i.e. if it has the "
    "opposite meaning of the reference, it should be ranked last.\n"
    "- If two sentences are equivalent, they should be ranked in adjacent positions\n"
    "\n"
    "Input Format:\n"
    "Reference: {reference}\n"
    "Sentence1: {sentence1}\n"
    "Sentence2: {sentence2}\n"
    "...\n"
    "SentenceN : {sentenceN}\n"
    "\n"
    "Output Format:\n"
    "Return, after a reasoning stage, the numbers of the sentences in order, from the number of "
    "the sentence that is the most similar to the reference to the one that is the least. "
    "([number_of_the_statement_ranked_first, number_of_the_statement_ranked_second, ... "
    "number_of_the_statement_ranked_last]).";

constexpr const char* kTemplate5Fol =
    "You are an expert evaluator specializing in ranking some First Order Logic formulas according "
    "to their semantic similarity. You will be given a reference sentence and some formulas; your "
    "task is to rank these formulas depending on whether they convey the same meaning of the "
    "reference or not.\n"
    "\n"
    "Instructions:\n"
    "- Ignore difference in syntax, variable names, or order of the subformulas. You are only "
    "interested in the semantic behind the formulas. It is possible that two formulas have a "
    "different logical structure but they convey the same logical meaning and this is the only "
    "thing you have to focus on;\n"
    "- If one of the formulas is equivalent to the reference, it should be ranked first;\n"
    "- If one of the formulas is equivalent to the negation of the reference, i.e. if it has the "
    "opposite meaning of the reference, it should be ranked last.\n"
    "- If two formulas are equivalent, they should be ranked in adjacent positions\n"
    "\n"
    "Input Format:\n"
    "Reference: {reference}\n"
    "Formula1: {formula1}\n"
    "Formula2: {formula2}\n"
    "...\n"
    "FormulaN : {formulaN}\n"
    "\n"
    "Output Format:\n"
    "Return, after a reasoning stage, the numbers of the formulas in order, from the number of "
    "the formula that is the most similar to the reference to the one that is the least. "
    "([number_of_the_statement_ranked_first, number_of_the_statement_ranked_second, ... "
    "number_of_the_statement_ranked_last]).";

constexpr const char* kTemplate6 = "Sentence: <\\reference\\>\n<\\candidates\\>";

void fill(std::string& text, const std::string& name, const std::string& value) {
  const std::string marker = "<\\" + name + "\\>";
  for (auto pos = text.find(marker); pos != std::string::npos; pos = text.find(marker, pos + value.size()))
    text.replace(pos, marker.size(), value);
}

const CandidateSet& need_set(const CandidateSet* set, transform::TaskKind task, int id) {
  if (!set) throw MissingPlaceholder("template " + std::to_string(id) + " needs a candidate set");
  if (set->task != task)
    throw MissingPlaceholder("template " + std::to_string(id) + " needs a " + transform::task_name(task) + " set");
  return *set;
}

std::string candidate_lines(const CandidateSet& set, bool ranking) {
  const bool fol = set.variant == Variant::FOL;
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto n = std::to_string(i + 1);
    std::string label;
    if (ranking) label = (fol ? "Formula" : "Sentence") + n;
    else label = (fol ? "Formula " : "Rephrasing ") + n;
    if (i) out += '\n';
    out += label + ": " + set.candidates[i].text;
  }
  return out;
}

}  // namespace

std::string predicate_symbol_lines(const fol::Ontology& o) {
  std::string out;
  for (const auto& [name, arity] : o.signature.predicates()) {
    const auto it = o.glossary.predicates.find(name);
    out += "\n  " + name + "/" + std::to_string(arity) + ": " +
           (it == o.glossary.predicates.end() ? std::string() : it->second.positive);
  }
  return out;
}

std::string constant_symbol_lines(const fol::Ontology& o) {
  std::string out;
  for (const auto& c : o.signature.constants()) {
    const auto it = o.glossary.constants.find(c);
    out += "\n  " + c + ": " + (it == o.glossary.constants.end() ? std::string() : it->second);
  }
  return out;
}

std::string render_template(int id, const fol::Instance& inst, const CandidateSet* set) {
  std::string text;
  switch (id) {
    case 1:
      if (!inst.ontology) throw MissingPlaceholder("template 1 needs the instance ontology");
      text = kTemplate1;
      fill(text, "predicate_symbols", predicate_symbol_lines(*inst.ontology));
      fill(text, "constant_symbols", constant_symbol_lines(*inst.ontology));
      return text;
    case 2:
      text = kTemplate2;
      fill(text, "sentence", inst.utterance);
      return text;
    case 3: {
      const auto& s = need_set(set, transform::TaskKind::MostSimilar, id);
      return s.variant == Variant::FOL ? kTemplate3Fol : kTemplate3;
    }
    case 4: {
      const auto& s = need_set(set, transform::TaskKind::MostSimilar, id);
      text = kTemplate4;
      fill(text, "reference", inst.utterance);
      fill(text, "candidates", candidate_lines(s, false));
      return text;
    }
    case 5: {
      const auto& s = need_set(set, transform::TaskKind::Ranking, id);
      return s.variant == Variant::FOL ? kTemplate5Fol : kTemplate5;
    }
    case 6: {
      const auto& s = need_set(set, transform::TaskKind::Ranking, id);
      text = kTemplate6;
      fill(text, "reference", inst.utterance);
      fill(text, "candidates", candidate_lines(s, true));
      return text;
    }
    default: throw ConfigError("unknown template id " + std::to_string(id));
  }
}

Prompt render_prompt(int id, const fol::Instance& inst, const CandidateSet* set) {
  if (id < 1 || id > 6) throw ConfigError("unknown template id " + std::to_string(id));
  const int system = id % 2 == 1 ? id : id - 1;
  return {render_template(system, inst, set), render_template(system + 1, inst, set)};
}

std::string embedding_instruction(Variant v) {
  return v == Variant::FOL
             ? "Encode the first-order logic meaning of the following first-order formula: "
             : "Encode the first-order logic meaning of the following natural-language sentence: ";
}

nlohmann::json output_schema(const std::string& task) {
  nlohmann::json answer;
  if (task == "logical_translation") answer = {{"type", "string"}};
  else if (task == "most_similar") answer = {{"type", "integer"}};
  else if (task == "ranking") answer = {{"type", "array"}, {"items", {{"type", "integer"}}}};
  else throw ConfigError("no output schema for task '" + task + "'");
  return {{"type", "object"},
          {"properties", {{"reasoning", {{"type", "string"}}}, {"answer", answer}}},
          {"required", {"reasoning", "answer"}},
          {"additionalProperties", false}};
}

}  // namespace folbench::harness
