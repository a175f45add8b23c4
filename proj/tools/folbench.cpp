// folbench command-line front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "folbench/equiv/brute_force.hpp"
#include "folbench/equiv/solver.hpp"
#include "folbench/errors.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/fol/ontology_io.hpp"
#include "folbench/fol/parser.hpp"
#include "folbench/fol/printer.hpp"
#include "folbench/harness/client.hpp"
#include "folbench/harness/dataset.hpp"
#include "folbench/harness/mocks.hpp"
#include "folbench/harness/runner.hpp"
#include "folbench/metrics/bleu.hpp"
#include "folbench/metrics/le_score.hpp"
#include "folbench/nlgen/translate.hpp"
#include "folbench/transform/candidates.hpp"
#include "folbench/transform/perturb.hpp"
#include "folbench/transform/rewrite.hpp"

using namespace folbench;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2, kNoSolver = 3 };

struct Globals {
  std::uint64_t seed = 3;
  std::string ontology;
  std::string solver;
  std::size_t max_domain = 3;
  bool json = false;
};

Globals g;

std::shared_ptr<const fol::Ontology> ontology() {
  static std::shared_ptr<const fol::Ontology> cached;
  if (!cached && !g.ontology.empty()) cached = std::make_shared<fol::Ontology>(fol::load_ontology(g.ontology));
  return cached;
}

struct Parsed {
  fol::Formula formula;
  fol::Signature sig;
  std::vector<std::string> warnings;
};

Parsed parse(const std::string& text) {
  if (auto o = ontology()) {
    auto r = fol::parse_formula_detailed(text, o->signature);
    return {std::move(r.formula), o->signature, std::move(r.warnings)};
  }
  auto r = fol::parse_formula_inferring(text);
  return {std::move(r.formula), std::move(r.signature), std::move(r.warnings)};
}

std::pair<Parsed, Parsed> parse_pair(const std::string& a, const std::string& b) {
  auto pa = parse(a);
  auto pb = parse(b);
  if (!ontology()) {
    const auto merged = pa.sig.merged_with(pb.sig);
    pa.sig = pb.sig = merged;
  }
  return {std::move(pa), std::move(pb)};
}

equiv::SolverConfig solver_config() {
  auto c = equiv::SolverConfig::from_environment();
  if (!g.solver.empty()) c.path = g.solver;
  return c;
}

void emit(const json& j, const std::string& text) {
  if (g.json) std::cout << j.dump() << "\n";
  else std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep))
    if (!part.empty()) out.push_back(part);
  return out;
}

// --- formula commands -------------------------------------------------------

void cmd_parse(const std::string& text) {
  const auto p = parse(text);
  json preds = json::object();
  for (const auto& [n, a] : p.sig.predicates()) preds[n] = a;
  json j = {{"formula", fol::print_formula(p.formula)},
            {"closed", fol::is_closed(p.formula)},
            {"predicates", preds},
            {"constants", p.sig.constants()},
            {"warnings", p.warnings}};
  std::string t = fol::print_formula(p.formula);
  for (const auto& w : p.warnings) t += "\nwarning: " + w;
  emit(j, t);
}

void cmd_unary(const std::string& text, fol::Formula (*op)(const fol::Formula&)) {
  const auto out = fol::print_formula(op(parse(text).formula));
  emit({{"formula", out}}, out);
}

fol::Formula identity(const fol::Formula& f) { return f; }

void cmd_translate(const std::string& text, bool parenthesized) {
  const auto o = ontology();
  if (!o) throw ConfigError("translate needs --ontology for the glossary");
  const auto s = nlgen::translate(parse(text).formula, o->glossary,
                                  parenthesized ? nlgen::RenderMode::Parenthesized : nlgen::RenderMode::Plain);
  emit({{"text", s}}, s);
}

void cmd_perturb(const std::string& text, std::size_t k) {
  const auto f = parse(text).formula;
  const auto ps = transform::sample_perturbations(f, k, g.seed);
  json arr = json::array();
  std::string t;
  for (const auto& p : ps) {
    const auto s = fol::print_formula(p.formula);
    arr.push_back({{"formula", s}, {"edit", transform::edit_kind_name(p.kind)}, {"site", p.site_index}});
    t += s + "\t" + transform::edit_kind_name(p.kind) + "@" + std::to_string(p.site_index) + "\n";
  }
  json j = {{"perturbations", arr}, {"requested", k}, {"available", ps.size()}};
  if (ps.size() < k) {
    const auto note = "only " + std::to_string(ps.size()) + " perturbation(s) available";
    j["note"] = note;
    if (!g.json) std::cerr << "note: " << note << "\n";
  }
  emit(j, t);
}

void cmd_rewrite(const std::string& text, const std::string& rule_name) {
  const auto f = parse(text).formula;
  std::optional<transform::Rewrite> r;
  if (rule_name.empty()) {
    r = transform::equivalent_rewrite(f, g.seed);
  } else {
    const auto rule = transform::rule_from_name(rule_name);
    if (!rule) throw ConfigError("unknown rule '" + rule_name + "'");
    Rng rng(g.seed);
    r = transform::equivalent_rewrite_with(f, *rule, rng);
    if (!r) throw UnsupportedConstruct("rule " + rule_name + " applies nowhere in the formula");
  }
  const auto s = fol::print_formula(r->formula);
  emit({{"formula", s}, {"rule", transform::rule_name(r->rule)}, {"site", r->site_index}}, s);
}

void cmd_check_equiv(const std::string& a, const std::string& b, const std::string& method) {
  const auto [pa, pb] = parse_pair(a, b);
  equiv::BruteForceOptions bf;
  bf.max_domain = g.max_domain;
  bf.seed = g.seed;
  const auto sc = solver_config();
  equiv::EquivVerdict v;
  if (method == "brute" || (method == "auto" && !equiv::solver_available(sc)))
    v = equiv::brute_force_check(pa.formula, pb.formula, pa.sig, bf);
  else
    v = equiv::solver_check(pa.formula, pb.formula, pa.sig, sc);

  std::string t;
  switch (v.kind) {
    case equiv::VerdictKind::Equivalent: t = "equivalent"; break;
    case equiv::VerdictKind::NotEquivalent:
      t = "not equivalent";
      if (v.witness) t += "\n" + equiv::describe_structure(*v.witness);
      break;
    case equiv::VerdictKind::Unknown: t = std::string("unknown (") + equiv::to_string(v.reason) + ")"; break;
  }
  emit(equiv::verdict_to_json(v), t);
}

void cmd_le(const std::string& a, const std::string& b, const std::vector<std::string>& match, bool table) {
  const auto [pa, pb] = parse_pair(a, b);
  metrics::PredicateMatching m;
  if (match.empty()) {
    m = metrics::default_matching(pa.formula, pb.formula);
  } else {
    std::set<std::string> right_used;
    for (const auto& spec : match) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos) throw ConfigError("--match expects LEFT=RIGHT, got '" + spec + "'");
      m.pairs[spec.substr(0, eq)] = spec.substr(eq + 1);
      right_used.insert(spec.substr(eq + 1));
    }
    for (const auto& p : metrics::predicates_in_order(pa.formula))
      if (!m.pairs.count(p)) m.unmatched_left.push_back(p);
    for (const auto& p : metrics::predicates_in_order(pb.formula))
      if (!right_used.count(p)) m.unmatched_right.push_back(p);
  }
  const auto t = metrics::le_table(pa.formula, pb.formula, m);
  json j = {{"score", t.score()}, {"columns", t.columns()}, {"agreeing", t.agreeing}, {"variables", t.variables},
            {"pairs", m.pairs}};
  std::string text = fmt(t.score());
  if (table) text = t.render() + text;
  emit(j, text);
}

void cmd_bleu(const std::string& ref, const std::string& cand) {
  const auto [pr, pc] = parse_pair(ref, cand);
  const double v = metrics::bleu_formula(pr.formula, pc.formula);
  emit({{"bleu", v}}, fmt(v));
}

// --- dataset and run commands ----------------------------------------------

struct RunFlags {
  std::string config;
  std::string dataset;
  std::string format;
  std::string task;
  std::string variant;
  std::optional<std::size_t> k;
  std::string seeds;
  std::string kind;
  std::string endpoint;
  std::string model;
  std::optional<int> max_tokens;
  std::string instruction;
  std::string out;
  std::string mock;
  std::string replay;
  std::optional<std::size_t> concurrency;
  bool keep_smt = false;
  bool no_solver = false;
  bool no_oracle = false;
  bool parenthesized = false;
};

harness::RunConfig make_config(const RunFlags& f) {
  json j = json::object();
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot read " + f.config);
    j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ConfigError(f.config + " is not valid JSON");
  }
  if (!f.dataset.empty()) j["dataset"] = f.dataset;
  if (!f.format.empty()) j["format"] = f.format;
  if (!f.task.empty()) j["task"] = f.task;
  if (!f.variant.empty()) j["variant"] = f.variant;
  if (f.k) j["k"] = *f.k;
  if (!f.seeds.empty()) {
    std::vector<std::uint64_t> seeds;
    for (const auto& s : split(f.seeds, ',')) seeds.push_back(std::stoull(s));
    j["seeds"] = seeds;
  }
  if (!f.kind.empty()) j["model"]["kind"] = f.kind;
  if (!f.endpoint.empty()) j["model"]["endpoint"] = f.endpoint;
  if (!f.model.empty()) j["model"]["name"] = f.model;
  if (f.max_tokens) j["model"]["max_completion_tokens"] = *f.max_tokens;
  if (!f.instruction.empty()) j["model"]["embedding_instruction"] = f.instruction;
  if (!f.out.empty()) j["output_dir"] = f.out;
  if (f.concurrency) j["concurrency"] = *f.concurrency;
  if (f.keep_smt) j["solver"]["keep_smt"] = true;
  if (f.no_solver) j["solver"]["use_solver"] = false;
  if (f.no_oracle) j["solver"]["oracle_checks"] = false;
  if (!g.solver.empty()) j["solver"]["path"] = g.solver;
  if (!j.contains("solver") || !j["solver"].contains("max_domain")) j["solver"]["max_domain"] = g.max_domain;
  if (f.parenthesized) j["render_mode"] = "parenthesized";
  if (!j.contains("solver") || !j["solver"].contains("path")) j["solver"]["path"] = solver_config().path;
  return harness::RunConfig::from_json(j);
}

std::unique_ptr<harness::ModelClient> make_client(const RunFlags& f, const harness::RunConfig& cfg,
                                                  const std::vector<fol::Instance>& data) {
  using harness::ScriptedTranslationMock;
  if (!f.replay.empty()) return std::make_unique<harness::ReplayMock>(f.replay);
  if (f.mock == "oracle") return std::make_unique<harness::OracleMock>(data, cfg);
  if (f.mock == "fixed") return std::make_unique<harness::FixedAnswerMock>();
  if (f.mock == "hash") return std::make_unique<harness::HashEmbeddingClient>();
  if (f.mock == "gold") return std::make_unique<ScriptedTranslationMock>(data, ScriptedTranslationMock::Mode::Gold);
  if (f.mock == "rewrite")
    return std::make_unique<ScriptedTranslationMock>(data, ScriptedTranslationMock::Mode::Rewrite);
  if (f.mock == "negate")
    return std::make_unique<ScriptedTranslationMock>(data, ScriptedTranslationMock::Mode::Negate);
  if (!f.mock.empty()) throw ConfigError("unknown mock '" + f.mock + "'");
  if (cfg.model.endpoint.empty()) throw ConfigError("run needs --endpoint, --mock or --replay");
  harness::HttpSettings s{cfg.model.endpoint, cfg.model.name};
  if (cfg.model.is_embedding()) return std::make_unique<harness::HttpEmbeddingClient>(s);
  return std::make_unique<harness::HttpChatClient>(s);
}

std::string summary_text(const metrics::ScoreReport& r) {
  std::string t;
  for (const auto& s : r.summaries())
    t += s.task + "\t" + fmt(s.mean) + " ± " + fmt(s.std_across_seeds) + "\t(n=" + std::to_string(s.n) + ")\n";
  for (const auto& [name, v] : r.statistics) t += name + "\t" + (v ? fmt(*v) : "undefined") + "\n";
  return t;
}

json summaries_json(const metrics::ScoreReport& r) {
  json arr = json::array();
  for (const auto& s : r.summaries())
    arr.push_back({{"task", s.task}, {"n", s.n}, {"mean", s.mean}, {"std_across_seeds", s.std_across_seeds},
                   {"flags", s.flag_counts}});
  return arr;
}

void cmd_build_task(const RunFlags& f, const std::string& instance, bool ground_truth) {
  auto cfg = make_config(f);
  if (cfg.task == "logical_translation") throw ConfigError("build-task needs --task most_similar or ranking");
  const auto data = harness::ingest_dataset(cfg.dataset, cfg.format);
  std::string t;
  json arr = json::array();
  for (const auto& inst : data.instances) {
    if (!instance.empty() && inst.id != instance) continue;
    const auto set = harness::plan_choice_task(inst, cfg, g.seed);
    auto j = transform::candidate_set_payload(set);
    if (ground_truth) j["ground_truth"] = transform::candidate_set_ground_truth(set);
    arr.push_back(j);
    t += j.dump() + "\n";
  }
  if (!instance.empty() && arr.empty()) throw ConfigError("no instance '" + instance + "' in the dataset");
  emit(arr, t);
}

void cmd_run(const RunFlags& f) {
  const auto cfg = make_config(f);
  const auto data = harness::ingest_dataset(cfg.dataset, cfg.format);
  auto client = make_client(f, cfg, data.instances);
  const auto r = harness::run_benchmark(cfg, *client);
  json j = {{"run_id", r.run_id},
            {"run_dir", r.run_dir ? r.run_dir->string() : ""},
            {"dropped_xor", r.dropped_xor},
            {"summaries", summaries_json(r.report)},
            {"statistics", r.report.to_json()["statistics"]}};
  std::string t = "run " + r.run_id + (r.run_dir ? " -> " + r.run_dir->string() : "") + "\n";
  if (r.dropped_xor) t += "dropped " + std::to_string(r.dropped_xor) + " record(s) using XOR\n";
  emit(j, t + summary_text(r.report));
}

void cmd_report(const std::string& path) {
  std::filesystem::path p = path;
  if (std::filesystem::is_directory(p)) p /= "report.json";
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot read " + p.string());
  const auto j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError(p.string() + " is not valid JSON");
  const auto r = metrics::ScoreReport::from_json(j);
  emit({{"summaries", summaries_json(r)}, {"statistics", j.value("statistics", json::object())}}, summary_text(r));
}

void add_run_flags(CLI::App* sub, RunFlags& f, bool full) {
  sub->add_option("--config", f.config, "RunConfig JSON file");
  sub->add_option("--dataset", f.dataset, "Dataset file");
  sub->add_option("--format", f.format, "triple_jsonl or folio_like");
  sub->add_option("--task", f.task, "logical_translation, most_similar or ranking");
  sub->add_option("--variant", f.variant, "fol or nl");
  sub->add_option("--k", f.k, "Number of perturbations");
  sub->add_flag("--parenthesized", f.parenthesized, "Bracket nested subformulas in NL renderings");
  sub->add_flag("--no-oracle", f.no_oracle, "Skip finite-model checks on candidates");
  if (!full) return;
  sub->add_option("--seeds", f.seeds, "Comma-separated seeds");
  sub->add_option("--kind", f.kind, "dialogue or embedding");
  sub->add_option("--endpoint", f.endpoint, "Chat or embeddings endpoint URL");
  sub->add_option("--model", f.model, "Model name sent to the endpoint");
  sub->add_option("--max-tokens", f.max_tokens, "max_completion_tokens");
  sub->add_option("--instruction", f.instruction, "Instruction prepended to embedded texts");
  sub->add_option("--out", f.out, "Parent directory of runs/<run_id>");
  sub->add_option("--mock", f.mock, "oracle, fixed, hash, gold, rewrite or negate");
  sub->add_option("--replay", f.replay, "Replay replies from a JSONL file");
  sub->add_option("--concurrency", f.concurrency, "Parallel requests");
  sub->add_flag("--keep-smt", f.keep_smt, "Keep SMT scripts under the run directory");
  sub->add_flag("--no-solver", f.no_solver, "Use the finite-model search instead of the solver");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order logic benchmarking toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--ontology", g.ontology, "Ontology JSON file");
  app.add_option("--solver", g.solver, "SMT solver executable");
  app.add_option("--max-domain", g.max_domain, "Largest domain for the finite-model search")->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string f1, f2, rule, method = "auto", instance, report_path;
  std::size_t k = 8;
  bool parenthesized = false, table = false, ground_truth = false;
  std::vector<std::string> match;
  RunFlags build_flags, run_flags;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and report symbols");
  parse_cmd->add_option("formula", f1)->required();
  auto* print_cmd = app.add_subcommand("print", "Print in canonical form");
  print_cmd->add_option("formula", f1)->required();
  auto* nnf_cmd = app.add_subcommand("nnf", "Negation normal form");
  nnf_cmd->add_option("formula", f1)->required();
  auto* negate_cmd = app.add_subcommand("negate", "Prefix a negation");
  negate_cmd->add_option("formula", f1)->required();
  auto* translate_cmd = app.add_subcommand("translate", "Render in English using the ontology glossary");
  translate_cmd->add_option("formula", f1)->required();
  translate_cmd->add_flag("--parenthesized", parenthesized);
  auto* perturb_cmd = app.add_subcommand("perturb", "Sample one-edit perturbations");
  perturb_cmd->add_option("formula", f1)->required();
  perturb_cmd->add_option("--k", k)->capture_default_str();
  auto* rewrite_cmd = app.add_subcommand("rewrite-eq", "Apply one equivalence-preserving rewrite");
  rewrite_cmd->add_option("formula", f1)->required();
  rewrite_cmd->add_option("--rule", rule, "double_negation, de_morgan, commutativity, distributivity, implication_expansion");
  auto* equiv_cmd = app.add_subcommand("check-equiv", "Decide logical equivalence");
  equiv_cmd->add_option("f1", f1)->required();
  equiv_cmd->add_option("f2", f2)->required();
  equiv_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "solver", "brute"}))->capture_default_str();
  auto* le_cmd = app.add_subcommand("le-score", "Logical-equivalence truth-table score");
  le_cmd->add_option("f1", f1)->required();
  le_cmd->add_option("f2", f2)->required();
  le_cmd->add_option("--match", match, "Predicate pairing LEFT=RIGHT (repeatable)");
  le_cmd->add_flag("--table", table, "Print the truth table");
  auto* bleu_cmd = app.add_subcommand("bleu", "BLEU over formula tokens");
  bleu_cmd->add_option("reference", f1)->required();
  bleu_cmd->add_option("candidate", f2)->required();
  auto* build_cmd = app.add_subcommand("build-task", "Print candidate sets for a dataset");
  add_run_flags(build_cmd, build_flags, false);
  build_cmd->add_option("--instance", instance, "Only this instance id");
  build_cmd->add_flag("--ground-truth", ground_truth, "Include labels and answer positions");
  auto* run_cmd = app.add_subcommand("run", "Run a benchmark task");
  add_run_flags(run_cmd, run_flags, true);
  auto* report_cmd = app.add_subcommand("report", "Summarise a run directory or report.json");
  report_cmd->add_option("path", report_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*parse_cmd) cmd_parse(f1);
    else if (*print_cmd) cmd_unary(f1, identity);
    else if (*nnf_cmd) cmd_unary(f1, fol::to_nnf);
    else if (*negate_cmd) cmd_unary(f1, fol::negate);
    else if (*translate_cmd) cmd_translate(f1, parenthesized);
    else if (*perturb_cmd) cmd_perturb(f1, k);
    else if (*rewrite_cmd) cmd_rewrite(f1, rule);
    else if (*equiv_cmd) cmd_check_equiv(f1, f2, method);
    else if (*le_cmd) cmd_le(f1, f2, match, table);
    else if (*bleu_cmd) cmd_bleu(f1, f2);
    else if (*build_cmd) cmd_build_task(build_flags, instance, ground_truth);
    else if (*run_cmd) cmd_run(run_flags);
    else if (*report_cmd) cmd_report(report_path);
  } catch (const Error& e) {
    if (g.json) std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    else std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return dynamic_cast<const SolverNotFound*>(&e) ? kNoSolver : kDomain;
  } catch (const std::exception& e) {
    if (g.json) std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    else std::cerr << "error: InternalError: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
