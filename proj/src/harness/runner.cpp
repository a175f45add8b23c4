#include "folbench/harness/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <set>
#include <thread>
#include <unordered_map>

#include <omp.h>

#include "folbench/equiv/solver.hpp"
#include "folbench/errors.hpp"
#include "folbench/fol/printer.hpp"
#include "folbench/harness/prompts.hpp"
#include "folbench/harness/reply.hpp"
#include "folbench/metrics/bleu.hpp"
#include "folbench/metrics/correlation.hpp"
#include "folbench/metrics/le_score.hpp"
#include "folbench/metrics/task_scores.hpp"
#include "folbench/rng.hpp"

namespace folbench::harness {

using nlohmann::json;
using transform::CandidateSet;
using transform::TaskKind;

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string render_mode_name(nlgen::RenderMode m) {
  return m == nlgen::RenderMode::Plain ? "plain" : "parenthesized";
}

struct Item {
  const fol::Instance* inst;
  std::uint64_t seed;
};

std::vector<Item> work_items(const RunConfig& cfg, const std::vector<fol::Instance>& data) {
  std::vector<Item> items;
  for (const auto& inst : data)
    for (auto s : cfg.seeds) items.push_back({&inst, s});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.inst->id, a.seed) < std::tie(b.inst->id, b.seed);
  });
  return items;
}

// Runs fn over [0, n) on up to `threads` OpenMP threads and rethrows the
// first failure (by index) afterwards.
template <class Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  const int t = static_cast<int>(std::max<std::size_t>(1, std::min(threads, n)));
#pragma omp parallel for schedule(dynamic) num_threads(t)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <class Call>
auto with_retry(const RunConfig& cfg, int& attempts, std::string& error, Call call)
    -> std::optional<decltype(call())> {
  const int max_attempts = std::max(1, cfg.max_attempts);
  for (attempts = 1; attempts <= max_attempts; ++attempts) {
    try {
      return call();
    } catch (const ClientError& e) {
      error = e.what();
    }
    if (attempts < max_attempts && cfg.backoff_ms > 0) {
      const double delay = cfg.backoff_ms * std::pow(2.0, attempts - 1);
      std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(delay));
    }
  }
  attempts = max_attempts;
  return std::nullopt;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void add_flag(std::vector<std::string>& flags, const std::string& f) {
  if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
}

void add_set_flags(const CandidateSet& set, std::vector<std::string>& flags) {
  for (const auto& c : set.candidates)
    if (c.equiv_to_original) add_flag(flags, "equiv_to_original");
  if (set.degenerate_negation) add_flag(flags, "degenerate_negation");
}

// The answer member as text, falling back to the whole reply.
std::string answer_text(const std::string& raw, const StructuredReply& sr,
                        std::vector<std::string>& flags) {
  if (sr.answer) {
    if (sr.answer->is_string()) return sr.answer->get<std::string>();
    return sr.answer->dump();
  }
  add_flag(flags, "unstructured_reply");
  return raw;
}

metrics::ScoreReport build_report(const std::vector<RunRecord>& records) {
  metrics::ScoreReport report;
  for (const auto& r : records)
    for (const auto& [name, value] : r.scores)
      report.records.push_back({r.instance_id, r.seed, name, r.variant, value, r.flags});
  report.sort();
  return report;
}

RunResult finish(const RunConfig& cfg, std::vector<RunRecord> records) {
  RunResult out;
  out.run_id = run_id(cfg);
  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.instance_id, a.seed) < std::tie(b.instance_id, b.seed);
  });
  out.report = build_report(records);
  out.records = std::move(records);
  return out;
}

RunRecord base_record(const RunConfig& cfg, const Item& it) {
  RunRecord r;
  r.instance_id = it.inst->id;
  r.seed = it.seed;
  r.task = cfg.task;
  r.variant = transform::variant_name(cfg.variant);
  return r;
}

ChatRequest make_request(const RunConfig& cfg, const Item& it, const Prompt& p) {
  ChatRequest req;
  req.system = p.system;
  req.user = p.user;
  req.seed = it.seed;
  req.max_tokens = cfg.model.max_completion_tokens;
  req.schema = output_schema(cfg.task);
  req.tag = {it.inst->id, it.seed, cfg.task, transform::variant_name(cfg.variant)};
  return req;
}

}  // namespace

std::size_t RunConfig::effective_k() const {
  if (k) return *k;
  return task == "ranking" ? 3 : 8;
}

void RunConfig::validate() const {
  if (task != "logical_translation" && task != "most_similar" && task != "ranking")
    throw ConfigError("unknown task '" + task + "'");
  if (seeds.empty()) throw ConfigError("no seeds given");
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size())
    throw ConfigError("seeds must be distinct");
  if (model.kind != "dialogue" && model.kind != "embedding")
    throw ConfigError("model kind must be dialogue or embedding");
  if (model.is_embedding() && task == "logical_translation")
    throw ConfigError("logical translation needs a dialogue model");
  if (concurrency == 0) throw ConfigError("concurrency must be positive");
}

json RunConfig::to_json() const {
  json j = {
      {"dataset", dataset},
      {"format", format_name(format)},
      {"task", task},
      {"variant", transform::variant_name(variant)},
      {"k", effective_k()},
      {"seeds", seeds},
      {"model",
       {{"kind", model.kind},
        {"endpoint", model.endpoint},
        {"name", model.name},
        {"max_completion_tokens", model.max_completion_tokens},
        {"embedding_instruction",
         model.embedding_instruction ? json(*model.embedding_instruction) : json(nullptr)}}},
      {"solver",
       {{"use_solver", solver.use_solver},
        {"path", solver.solver.path},
        {"args", solver.solver.args},
        {"extra_args", solver.solver.extra_args},
        {"timeout_ms", solver.solver.timeout_ms},
        {"max_domain", solver.brute_force.max_domain},
        {"budget", solver.brute_force.budget},
        {"oracle_checks", solver.oracle_checks},
        {"keep_smt", solver.keep_smt}}},
      {"render_mode", render_mode_name(render_mode)},
      {"output_dir", output_dir},
      {"concurrency", concurrency},
      {"max_attempts", max_attempts},
      {"backoff_ms", backoff_ms},
  };
  return j;
}

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  try {
    c.dataset = j.value("dataset", c.dataset);
    if (j.contains("format")) {
      auto f = format_from_name(j["format"].get<std::string>());
      if (!f) throw ConfigError("unknown dataset format " + j["format"].dump());
      c.format = *f;
    }
    c.task = j.value("task", c.task);
    if (j.contains("variant")) {
      auto v = transform::variant_from_name(j["variant"].get<std::string>());
      if (!v) throw ConfigError("unknown variant " + j["variant"].dump());
      c.variant = *v;
    }
    if (j.contains("k") && !j["k"].is_null()) c.k = j["k"].get<std::size_t>();
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    if (j.contains("model")) {
      const auto& m = j["model"];
      c.model.kind = m.value("kind", c.model.kind);
      c.model.endpoint = m.value("endpoint", c.model.endpoint);
      c.model.name = m.value("name", c.model.name);
      c.model.max_completion_tokens = m.value("max_completion_tokens", c.model.max_completion_tokens);
      if (m.contains("embedding_instruction") && m["embedding_instruction"].is_string())
        c.model.embedding_instruction = m["embedding_instruction"].get<std::string>();
    }
    if (j.contains("solver")) {
      const auto& s = j["solver"];
      c.solver.use_solver = s.value("use_solver", c.solver.use_solver);
      c.solver.solver.path = s.value("path", c.solver.solver.path);
      c.solver.solver.args = s.value("args", c.solver.solver.args);
      c.solver.solver.extra_args = s.value("extra_args", c.solver.solver.extra_args);
      c.solver.solver.timeout_ms = s.value("timeout_ms", c.solver.solver.timeout_ms);
      c.solver.brute_force.max_domain = s.value("max_domain", c.solver.brute_force.max_domain);
      c.solver.brute_force.budget = s.value("budget", c.solver.brute_force.budget);
      c.solver.oracle_checks = s.value("oracle_checks", c.solver.oracle_checks);
      c.solver.keep_smt = s.value("keep_smt", c.solver.keep_smt);
    }
    if (j.contains("render_mode")) {
      const auto m = j["render_mode"].get<std::string>();
      if (m == "plain") c.render_mode = nlgen::RenderMode::Plain;
      else if (m == "parenthesized") c.render_mode = nlgen::RenderMode::Parenthesized;
      else throw ConfigError("unknown render mode '" + m + "'");
    }
    c.output_dir = j.value("output_dir", c.output_dir);
    c.concurrency = j.value("concurrency", c.concurrency);
    c.max_attempts = j.value("max_attempts", c.max_attempts);
    c.backoff_ms = j.value("backoff_ms", c.backoff_ms);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad run configuration: ") + e.what());
  }
  c.validate();
  return c;
}

std::string run_id(const RunConfig& cfg) {
  auto j = cfg.to_json();
  j.erase("output_dir");
  return hex64(fnv1a64(j.dump()));
}

json RunRecord::to_json() const {
  return {{"instance_id", instance_id}, {"seed", seed},           {"task", task},
          {"variant", variant},         {"system", system_prompt}, {"user", user_prompt},
          {"raw_reply", raw_reply},     {"parsed", parsed},        {"verdict", verdict},
          {"scores", scores},           {"flags", flags},          {"attempts", attempts},
          {"wall_ms", wall_ms}};
}

RunRecord RunRecord::from_json(const json& j) {
  RunRecord r;
  r.instance_id = j.at("instance_id").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.task = j.at("task").get<std::string>();
  r.variant = j.value("variant", "");
  r.system_prompt = j.value("system", "");
  r.user_prompt = j.value("user", "");
  r.raw_reply = j.value("raw_reply", "");
  r.parsed = j.value("parsed", json());
  r.verdict = j.value("verdict", json());
  r.scores = j.value("scores", std::map<std::string, double>{});
  r.flags = j.value("flags", std::vector<std::string>{});
  r.attempts = j.value("attempts", 0);
  r.wall_ms = j.value("wall_ms", 0.0);
  return r;
}

CandidateSet plan_choice_task(const fol::Instance& inst, const RunConfig& cfg, std::uint64_t seed) {
  transform::BuildOptions opts;
  opts.render_mode = cfg.render_mode;
  opts.oracle_checks = cfg.solver.oracle_checks;
  opts.oracle = cfg.solver.brute_force;
  if (cfg.task == "most_similar")
    return transform::build_most_similar(inst, cfg.effective_k(), seed, cfg.variant, opts);
  if (cfg.task == "ranking")
    return transform::build_ranking(inst, cfg.effective_k(), seed, cfg.variant, opts);
  throw ConfigError("task '" + cfg.task + "' has no candidate set");
}

RunResult run_logical_translation(const RunConfig& cfg, const std::vector<fol::Instance>& data,
                                  ModelClient& client) {
  cfg.validate();
  const auto items = work_items(cfg, data);
  const bool have_solver = cfg.solver.use_solver && equiv::solver_available(cfg.solver.solver);
  std::vector<RunRecord> records(items.size());

  parallel_for(items.size(), cfg.concurrency, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const Item& it = items[i];
    const fol::Instance& inst = *it.inst;
    RunRecord r = base_record(cfg, it);
    const auto prompt = render_prompt(1, inst);
    r.system_prompt = prompt.system;
    r.user_prompt = prompt.user;
    r.scores["logical_translation"] = 0;

    std::string error;
    auto raw = with_retry(cfg, r.attempts, error,
                          [&] { return client.chat(make_request(cfg, it, prompt)); });
    if (!raw) {
      add_flag(r.flags, "client_error");
      r.parsed = {{"error", error}};
      r.wall_ms = elapsed_ms(start);
      records[i] = std::move(r);
      return;
    }
    r.raw_reply = *raw;
    const auto sr = parse_structured_reply(*raw);
    const auto text = answer_text(*raw, sr, r.flags);
    const auto& sig = inst.ontology->signature;
    auto ex = extract_formula(text, sig);
    if (!ex.formula) {
      add_flag(r.flags, "malformed");
      r.parsed = {{"text", text}, {"error", ex.error}};
      r.wall_ms = elapsed_ms(start);
      records[i] = std::move(r);
      return;
    }
    if (ex.fallback) add_flag(r.flags, "fallback_extraction");
    const fol::Formula& cand = *ex.formula;
    r.parsed = {{"formula", fol::print_formula(cand)}, {"text", ex.text}};

    equiv::EquivVerdict v;
    if (cand == inst.formula) {
      v.kind = equiv::VerdictKind::Equivalent;
      v.method = "syntactic";
    } else if (have_solver) {
      try {
        v = equiv::solver_check(cand, inst.formula, sig, cfg.solver.solver,
                                inst.id + "_" + std::to_string(it.seed));
      } catch (const SolverCrashed& e) {
        add_flag(r.flags, "solver_error");
        v.kind = equiv::VerdictKind::Unknown;
        v.method = "solver";
        v.detail = e.what();
      }
    } else {
      v = equiv::brute_force_check(cand, inst.formula, sig, cfg.solver.brute_force);
    }
    if (v.unknown()) add_flag(r.flags, "solver_unknown");
    r.verdict = equiv::verdict_to_json(v);
    r.scores["logical_translation"] = v.equivalent() ? 1 : 0;

    r.scores["bleu"] = metrics::bleu_formula(inst.formula, cand);
    try {
      r.scores["le"] = metrics::le_score(inst.formula, cand, metrics::default_matching(inst.formula, cand));
    } catch (const Error&) {
      add_flag(r.flags, "le_undefined");
    }
    r.wall_ms = elapsed_ms(start);
    records[i] = std::move(r);
  });

  auto out = finish(cfg, std::move(records));
  for (const std::string metric : {"bleu", "le"}) {
    std::vector<int> success;
    std::vector<double> value;
    for (const auto& r : out.records) {
      const auto m = r.scores.find(metric);
      if (m == r.scores.end()) continue;
      success.push_back(r.scores.at("logical_translation") > 0.5 ? 1 : 0);
      value.push_back(m->second);
    }
    std::optional<double> rpb;
    if (success.size() >= 2) rpb = metrics::point_biserial(success, value);
    out.report.statistics["point_biserial_" + metric] = rpb;
  }
  return out;
}

RunResult run_choice_task(const RunConfig& cfg, const std::vector<fol::Instance>& data,
                          ModelClient& client) {
  cfg.validate();
  if (cfg.task == "logical_translation") throw ConfigError("not a choice task");
  const auto items = work_items(cfg, data);
  const bool ranking = cfg.task == "ranking";
  std::vector<RunRecord> records(items.size());

  parallel_for(items.size(), cfg.concurrency, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const Item& it = items[i];
    RunRecord r = base_record(cfg, it);
    const auto set = plan_choice_task(*it.inst, cfg, it.seed);
    add_set_flags(set, r.flags);
    r.verdict = transform::candidate_set_ground_truth(set);
    const auto prompt = render_prompt(ranking ? 5 : 3, *it.inst, &set);
    r.system_prompt = prompt.system;
    r.user_prompt = prompt.user;
    if (ranking) r.scores = {{"ranking_eq", 0}, {"ranking_neg", 0}, {"ranking_both", 0}};
    else r.scores = {{"most_similar", 0}};

    std::string error;
    auto raw = with_retry(cfg, r.attempts, error,
                          [&] { return client.chat(make_request(cfg, it, prompt)); });
    if (!raw) {
      add_flag(r.flags, "client_error");
      r.parsed = {{"error", error}};
      r.wall_ms = elapsed_ms(start);
      records[i] = std::move(r);
      return;
    }
    r.raw_reply = *raw;
    const auto sr = parse_structured_reply(*raw);
    json answer = sr.answer ? *sr.answer : json(*raw);
    if (!sr.answer) add_flag(r.flags, "unstructured_reply");

    if (!ranking) {
      const auto pos = parse_position_answer(answer);
      r.parsed = pos ? json(*pos) : json(nullptr);
      if (!pos || *pos < 1 || static_cast<std::size_t>(*pos) > set.size()) {
        add_flag(r.flags, "malformed");
      } else {
        r.scores["most_similar"] = metrics::score_most_similar(static_cast<std::size_t>(*pos), set);
      }
    } else {
      const auto order = parse_ranking_answer(answer);
      r.parsed = order ? json(*order) : json(nullptr);
      std::vector<std::size_t> ranking_pos;
      bool ok = order.has_value();
      if (ok)
        for (auto v : *order) {
          if (v < 1) ok = false;
          else ranking_pos.push_back(static_cast<std::size_t>(v));
        }
      if (ok && metrics::is_permutation_of_positions(ranking_pos, set.size())) {
        const auto s = metrics::score_ranking(ranking_pos, set);
        r.scores = {{"ranking_eq", s.eq}, {"ranking_neg", s.neg}, {"ranking_both", s.both}};
      } else {
        add_flag(r.flags, "malformed");
      }
    }
    r.wall_ms = elapsed_ms(start);
    records[i] = std::move(r);
  });
  return finish(cfg, std::move(records));
}

RunResult run_embedding_task(const RunConfig& cfg, const std::vector<fol::Instance>& data,
                             ModelClient& client) {
  cfg.validate();
  if (cfg.task == "logical_translation") throw ConfigError("not a choice task");
  const auto items = work_items(cfg, data);
  const bool ranking = cfg.task == "ranking";
  const auto& instruction = cfg.model.embedding_instruction;

  std::vector<CandidateSet> sets(items.size());
  parallel_for(items.size(), cfg.concurrency,
               [&](std::size_t i) { sets[i] = plan_choice_task(*items[i].inst, cfg, items[i].seed); });

  // Every distinct text is embedded exactly once.
  std::vector<std::string> texts;
  std::unordered_map<std::string, std::size_t> text_index;
  auto intern = [&](const std::string& t) {
    if (text_index.emplace(t, texts.size()).second) texts.push_back(t);
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    intern(items[i].inst->utterance);
    for (const auto& c : sets[i].candidates) intern(c.text);
  }
  struct Embedded {
    std::optional<std::vector<double>> vec;
    int attempts = 0;
    std::string error;
  };
  std::vector<Embedded> emb(texts.size());
  parallel_for(texts.size(), cfg.concurrency, [&](std::size_t t) {
    emb[t].vec = with_retry(cfg, emb[t].attempts, emb[t].error,
                            [&] { return client.embed(texts[t], instruction); });
  });

  std::vector<RunRecord> records(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    const CandidateSet& set = sets[i];
    RunRecord r = base_record(cfg, it);
    add_set_flags(set, r.flags);
    r.verdict = transform::candidate_set_ground_truth(set);
    r.system_prompt = instruction.value_or("");
    r.user_prompt = it.inst->utterance;
    if (ranking) r.scores = {{"ranking_eq", 0}, {"ranking_neg", 0}, {"ranking_both", 0}};
    else r.scores = {{"most_similar", 0}};

    std::vector<const Embedded*> vecs{&emb[text_index.at(it.inst->utterance)]};
    for (const auto& c : set.candidates) vecs.push_back(&emb[text_index.at(c.text)]);
    for (const auto* e : vecs) r.attempts = std::max(r.attempts, e->attempts);
    if (std::any_of(vecs.begin(), vecs.end(), [](const Embedded* e) { return !e->vec; })) {
      add_flag(r.flags, "client_error");
      records[i] = std::move(r);
      continue;
    }
    const std::size_t dim = vecs[0]->vec->size();
    if (std::any_of(vecs.begin(), vecs.end(), [&](const Embedded* e) { return e->vec->size() != dim; })) {
      add_flag(r.flags, "dimension_mismatch");
      records[i] = std::move(r);
      continue;
    }

    const auto& p = *vecs[0]->vec;
    auto cosine = [&](const std::vector<double>& v) {
      double dot = 0, np = 0, nv = 0;
      for (std::size_t d = 0; d < dim; ++d) {
        dot += p[d] * v[d];
        np += p[d] * p[d];
        nv += v[d] * v[d];
      }
      return np > 0 && nv > 0 ? dot / std::sqrt(np * nv) : 0.0;
    };
    std::vector<double> cos;
    json digests = json::array();
    for (std::size_t c = 0; c < vecs.size(); ++c) {
      const auto& v = *vecs[c]->vec;
      digests.push_back(hex64(fnv1a64(std::string_view(reinterpret_cast<const char*>(v.data()),
                                                        v.size() * sizeof(double)))));
      if (c > 0) cos.push_back(cosine(v));
    }

    // Positions by decreasing cosine; equal cosines keep the lower position first.
    std::vector<std::size_t> order(cos.size());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = c + 1;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cos[a - 1] > cos[b - 1]; });
    if (!ranking) {
      if (cos.size() > 1 && cos[order[0] - 1] == cos[order[1] - 1]) add_flag(r.flags, "tie");
      r.scores["most_similar"] = metrics::score_most_similar(order[0], set);
      r.parsed = {{"choice", order[0]}, {"cosines", cos}, {"digests", digests}};
    } else {
      for (std::size_t c = 1; c < order.size(); ++c)
        if (cos[order[c] - 1] == cos[order[c - 1] - 1]) add_flag(r.flags, "tie");
      const auto s = metrics::score_ranking(order, set);
      r.scores = {{"ranking_eq", s.eq}, {"ranking_neg", s.neg}, {"ranking_both", s.both}};
      r.parsed = {{"ranking", order}, {"cosines", cos}, {"digests", digests}};
    }
    records[i] = std::move(r);
  }
  return finish(cfg, std::move(records));
}

RunResult run_task(const RunConfig& cfg, const std::vector<fol::Instance>& data, ModelClient& client) {
  cfg.validate();
  if (cfg.task == "logical_translation") return run_logical_translation(cfg, data, client);
  if (cfg.model.is_embedding()) return run_embedding_task(cfg, data, client);
  return run_choice_task(cfg, data, client);
}

RunResult run_benchmark(const RunConfig& cfg_in, ModelClient& client) {
  cfg_in.validate();
  RunConfig cfg = cfg_in;
  const auto ingest = ingest_dataset(cfg.dataset, cfg.format);
  const auto id = run_id(cfg);
  std::optional<std::filesystem::path> dir;
  if (!cfg.output_dir.empty()) {
    dir = std::filesystem::path(cfg.output_dir) / id;
    std::filesystem::create_directories(*dir);
    if (cfg.solver.keep_smt) {
      cfg.solver.solver.keep_smt_dir = *dir / "smt";
      std::filesystem::create_directories(*dir / "smt");
    }
  }
  auto result = run_task(cfg, ingest.instances, client);
  result.dropped_xor = ingest.dropped_xor;
  if (dir) {
    write_run(cfg_in, result, *dir);
    result.run_dir = dir;
  }
  return result;
}

void write_run(const RunConfig& cfg, const RunResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + (dir / name).string());
    out << body;
  };
  write("config.json", cfg.to_json().dump(2) + "\n");
  std::string lines;
  for (const auto& r : result.records) lines += r.to_json().dump() + "\n";
  write("records.jsonl", lines);
  write("report.json", result.report.to_json().dump(2) + "\n");
  write("report.csv", result.report.to_csv());
}

}  // namespace folbench::harness
