#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>

#include "folbench/errors.hpp"
#include "folbench/fol/printer.hpp"
#include "folbench/harness/client.hpp"
#include "folbench/harness/dataset.hpp"
#include "folbench/harness/mocks.hpp"
#include "folbench/harness/prompts.hpp"
#include "folbench/harness/reply.hpp"
#include "folbench/harness/runner.hpp"

using namespace folbench;
using namespace folbench::harness;
using transform::Variant;

namespace {

const std::filesystem::path kFixtures = FOLBENCH_FIXTURES;

const std::vector<fol::Instance>& tarski() {
  static const auto data = ingest_dataset(kFixtures / "tarski50.jsonl", DatasetFormat::TripleJsonl).instances;
  return data;
}

std::vector<fol::Instance> first(std::size_t n) {
  return {tarski().begin(), tarski().begin() + static_cast<long>(n)};
}

RunConfig base_cfg(const std::string& task, Variant v = Variant::FOL) {
  RunConfig c;
  c.task = task;
  c.variant = v;
  c.output_dir.clear();
  c.backoff_ms = 0;
#ifdef FOLBENCH_SOLVER_PATH
  c.solver.solver.path = FOLBENCH_SOLVER_PATH;
#endif
  return c;
}

double mean_of(const RunResult& r, const std::string& task) {
  auto s = r.report.summary(task);
  EXPECT_TRUE(s.has_value()) << task;
  return s ? s->mean : -1;
}

bool has_flag(const RunRecord& r, const std::string& f) {
  return std::find(r.flags.begin(), r.flags.end(), f) != r.flags.end();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Dataset, TripleFixture) {
  const auto& d = tarski();
  ASSERT_EQ(d.size(), 50u);
  EXPECT_EQ(d[0].id, "t01");
  EXPECT_EQ(d[0].utterance, "a is a cube.");
  for (const auto& inst : d) EXPECT_EQ(inst.ontology, d[0].ontology);
}

TEST(Dataset, XorDropped) {
  const std::string text =
      R"j({"id": "1", "nl": "p", "fol": "P(a)", "ontology": {"predicates": {"P": {"arity": 1}}, "constants": {"a": "a"}}})j"
      "\n"
      R"j({"id": "2", "nl": "p", "fol": "P(a) ⊕ P(a)", "ontology": {"predicates": {"P": {"arity": 1}}, "constants": {"a": "a"}}})j"
      "\n"
      R"j({"id": "3", "nl": "p", "fol": "¬P(a)", "ontology": {"predicates": {"P": {"arity": 1}}, "constants": {"a": "a"}}})j";
  const auto r = ingest_dataset_text(text, DatasetFormat::TripleJsonl);
  EXPECT_EQ(r.instances.size(), 2u);
  EXPECT_EQ(r.dropped_xor, 1u);
  EXPECT_EQ(r.dropped_ids, std::vector<std::string>{"2"});
}

TEST(Dataset, FolioStoriesShareOntology) {
  const auto r = ingest_dataset(kFixtures / "folio_sample.jsonl", DatasetFormat::FolioLike);
  EXPECT_EQ(r.dropped_xor, 1u);
  ASSERT_EQ(r.instances.size(), 6u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(r.instances[i].id, "music-" + std::to_string(i));
    EXPECT_EQ(r.instances[i].ontology, r.instances[0].ontology);
  }
  EXPECT_NE(r.instances[5].ontology, r.instances[0].ontology);
}

TEST(Dataset, Errors) {
  const std::string onto = R"j("ontology": {"predicates": {"P": {"arity": 1}}, "constants": {"a": "a"}})j";
  try {
    ingest_dataset_text(R"j({"id": "bad7", "nl": "p", "fol": "P(a) ∧", )j" + onto + "}", DatasetFormat::TripleJsonl);
    FAIL();
  } catch (const ParseFailure& e) {
    EXPECT_NE(std::string(e.what()).find("bad7"), std::string::npos);
  }
  EXPECT_THROW(ingest_dataset_text(R"j({"id": "x", "nl": "p", "fol": "Q(a)", )j" + onto + "}",
                                   DatasetFormat::TripleJsonl),
               OntologyMismatch);
  EXPECT_THROW(ingest_dataset_text(R"j({"id": "x", "nl": "p", "fol": "P(x)", )j" + onto + "}",
                                   DatasetFormat::TripleJsonl),
               ParseFailure);
  EXPECT_THROW(ingest_dataset(kFixtures / "missing.jsonl", DatasetFormat::TripleJsonl), ConfigError);
}

TEST(Prompts, TranslationTemplate) {
  const auto p = render_prompt(1, tarski()[0]);
  EXPECT_NE(p.system.find("-  logical symbols: ∀ (for all), ∃ (exists), → (implies), ↔ (is equivalent to), "
                          "∧ (and), ∨ (or), ¬ (not)\n"),
            std::string::npos);
  EXPECT_NE(p.system.find("- predicate symbols: \n  Adjoins/2: x1 adjoins x2\n  Cube/1: x1 is a cube\n"),
            std::string::npos);
  EXPECT_NE(p.system.find("- contant symbols: \n  a: a\n"), std::string::npos);
  EXPECT_NE(p.system.find("You can use the following symbols: \n"), std::string::npos);
  EXPECT_EQ(p.user, "Sentence: a is a cube.");
  EXPECT_EQ(p.system.find("<\\"), std::string::npos);
}

TEST(Prompts, ChoiceTemplates) {
  const auto& inst = tarski()[6];
  auto cfg = base_cfg("most_similar", Variant::NL);
  const auto set = plan_choice_task(inst, cfg, 3);
  const auto p = render_prompt(4, inst, &set);
  EXPECT_EQ(p.system.rfind("You are an expert evaluator specializing in semantic similarity assessment.", 0), 0u);
  EXPECT_EQ(p.user.rfind("Sentence: Every cube is large.\nRephrasing 1: ", 0), 0u);
  EXPECT_NE(p.user.find("\nRephrasing " + std::to_string(set.size()) + ": "), std::string::npos);
  for (const auto* word : {"original", "perturbation", "negation", "equivalent"})
    EXPECT_EQ(p.user.find(word), std::string::npos) << word;

  cfg.task = "ranking";
  cfg.variant = Variant::FOL;
  const auto rset = plan_choice_task(inst, cfg, 3);
  const auto r = render_prompt(6, inst, &rset);
  EXPECT_EQ(r.system.rfind("You are an expert evaluator specializing in ranking some First Order Logic formulas", 0), 0u);
  EXPECT_EQ(r.user.rfind("Sentence: Every cube is large.\nFormula1: ", 0), 0u);
  EXPECT_NE(r.user.find("\nFormula" + std::to_string(rset.size()) + ": "), std::string::npos);

  EXPECT_THROW(render_prompt(7, inst, &set), ConfigError);
  EXPECT_THROW(render_prompt(0, inst), ConfigError);
  EXPECT_THROW(render_prompt(3, inst), MissingPlaceholder);
  EXPECT_THROW(render_prompt(5, inst, &set), MissingPlaceholder);
}

TEST(Prompts, Schema) {
  EXPECT_EQ(output_schema("most_similar")["properties"]["answer"]["type"], "integer");
  EXPECT_EQ(output_schema("ranking")["properties"]["answer"]["items"]["type"], "integer");
  EXPECT_EQ(output_schema("logical_translation")["required"], nlohmann::json({"reasoning", "answer"}));
  EXPECT_THROW(output_schema("bleu"), ConfigError);
}

TEST(Reply, Structured) {
  auto r = parse_structured_reply(R"j({"reasoning": "x", "answer": 3})j");
  ASSERT_TRUE(r.answer);
  EXPECT_EQ(*r.answer, 3);
  r = parse_structured_reply("Sure! {\"reasoning\": \"a } b\", \"answer\": [2, 1]} done");
  ASSERT_TRUE(r.answer);
  EXPECT_TRUE(r.from_embedded_block);
  EXPECT_EQ(*r.answer, nlohmann::json({2, 1}));
  EXPECT_FALSE(parse_structured_reply("no json here").object);
}

TEST(Reply, Answers) {
  EXPECT_EQ(parse_position_answer(4), 4);
  EXPECT_EQ(parse_position_answer("Rephrasing 2"), 2);
  EXPECT_FALSE(parse_position_answer("1 or 2"));
  EXPECT_FALSE(parse_position_answer(2.5));
  EXPECT_EQ(*parse_ranking_answer(nlohmann::json({3, "1", 2})), (std::vector<long long>{3, 1, 2}));
  EXPECT_EQ(*parse_ranking_answer("[3, 1, 2]"), (std::vector<long long>{3, 1, 2}));
  EXPECT_FALSE(parse_ranking_answer(nlohmann::json({1, "x"})));
}

TEST(Reply, FormulaExtraction) {
  const auto& sig = tarski()[0].ontology->signature;
  auto e = extract_formula("∀x (Cube(x) → Large(x))", sig);
  ASSERT_TRUE(e.formula);
  EXPECT_FALSE(e.fallback);
  e = extract_formula("The formula is ∀x (Cube(x) → Large(x)). Done.", sig);
  ASSERT_TRUE(e.formula);
  EXPECT_TRUE(e.fallback);
  EXPECT_EQ(fol::print_formula(*e.formula), "∀x Cube(x) → Large(x)");
  e = extract_formula("I think Cube(a) holds,\nbut really Cube(a) ∧ Tet(b)", sig);
  ASSERT_TRUE(e.formula);
  EXPECT_EQ(fol::print_formula(*e.formula), "Cube(a) ∧ Tet(b)");
  EXPECT_FALSE(extract_formula("Sphere(a)", sig).formula);
  EXPECT_FALSE(extract_formula("Cube(x)", sig).formula);
}

TEST(Runner, ConfigRoundTrip) {
  auto c = base_cfg("ranking", Variant::NL);
  c.seeds = {1, 2};
  c.model.embedding_instruction = "Encode: ";
  const auto back = RunConfig::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_EQ(back.effective_k(), 3u);
  EXPECT_EQ(base_cfg("most_similar").effective_k(), 8u);
  EXPECT_EQ(run_id(back), run_id(c));
  c.seeds = {1, 1};
  EXPECT_THROW(c.validate(), ConfigError);
  c.seeds.clear();
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(RunConfig::from_json({{"task", "summarise"}}), ConfigError);
  EXPECT_EQ(RunConfig().seeds, (std::vector<std::uint64_t>{3, 12, 26, 85, 107}));
}

TEST(Runner, TranslationGold) {
  const auto data = first(20);
  ScriptedTranslationMock gold(data, ScriptedTranslationMock::Mode::Gold);
  const auto r = run_logical_translation(base_cfg("logical_translation"), data, gold);
  EXPECT_EQ(r.records.size(), 100u);
  EXPECT_DOUBLE_EQ(mean_of(r, "logical_translation"), 1.0);
  EXPECT_DOUBLE_EQ(mean_of(r, "bleu"), 1.0);
  EXPECT_DOUBLE_EQ(mean_of(r, "le"), 1.0);
  // All successes: the correlation is undefined.
  EXPECT_FALSE(r.report.statistics.at("point_biserial_bleu").has_value());
}

TEST(Runner, TranslationRewriteAndNegation) {
  auto cfg = base_cfg("logical_translation");
  if (!equiv::solver_available(cfg.solver.solver)) GTEST_SKIP() << "no SMT solver on this machine";
  const auto& data = tarski();
  ScriptedTranslationMock rewrite(data, ScriptedTranslationMock::Mode::Rewrite);
  const auto r = run_logical_translation(cfg, data, rewrite);
  EXPECT_DOUBLE_EQ(mean_of(r, "logical_translation"), 1.0);
  std::size_t via_solver = 0;
  for (const auto& rec : r.records)
    if (rec.verdict.value("method", "") != "syntactic") ++via_solver;
  EXPECT_GT(via_solver, 200u);

  ScriptedTranslationMock negate(data, ScriptedTranslationMock::Mode::Negate);
  const auto n = run_logical_translation(cfg, data, negate);
  EXPECT_DOUBLE_EQ(mean_of(n, "logical_translation"), 0.0);
  EXPECT_TRUE(n.report.statistics.count("point_biserial_le"));
}

TEST(Runner, TranslationWithoutSolverOnlyRefutes) {
  auto cfg = base_cfg("logical_translation");
  cfg.solver.use_solver = false;
  const auto data = first(10);
  ScriptedTranslationMock rewrite(data, ScriptedTranslationMock::Mode::Rewrite);
  const auto r = run_logical_translation(cfg, data, rewrite);
  for (const auto& rec : r.records) {
    if (rec.verdict.value("method", "") == "syntactic") continue;
    EXPECT_EQ(rec.scores.at("logical_translation"), 0.0);
    EXPECT_TRUE(has_flag(rec, "solver_unknown"));
  }
}

TEST(Runner, MalformedTranslation) {
  const auto data = first(3);
  FixedAnswerMock junk(1, "Sphere(a) ∧");
  const auto r = run_logical_translation(base_cfg("logical_translation"), data, junk);
  for (const auto& rec : r.records) {
    EXPECT_TRUE(has_flag(rec, "malformed"));
    EXPECT_EQ(rec.scores.at("logical_translation"), 0.0);
    EXPECT_FALSE(rec.scores.count("bleu"));
  }
}

TEST(Runner, OracleChoiceTasks) {
  const auto data = first(15);
  for (auto v : {Variant::FOL, Variant::NL}) {
    auto ms = base_cfg("most_similar", v);
    OracleMock oracle_ms(data, ms);
    EXPECT_DOUBLE_EQ(mean_of(run_choice_task(ms, data, oracle_ms), "most_similar"), 1.0);

    auto rk = base_cfg("ranking", v);
    OracleMock oracle_rk(data, rk);
    const auto r = run_choice_task(rk, data, oracle_rk);
    for (const auto* t : {"ranking_eq", "ranking_neg", "ranking_both"}) EXPECT_DOUBLE_EQ(mean_of(r, t), 1.0) << t;
  }
}

TEST(Runner, OutOfRangeAndNonPermutation) {
  const auto data = first(4);
  FixedAnswerMock far(99);
  const auto r = run_choice_task(base_cfg("most_similar"), data, far);
  for (const auto& rec : r.records) {
    EXPECT_TRUE(has_flag(rec, "malformed"));
    EXPECT_EQ(rec.scores.at("most_similar"), 0.0);
  }

  class Dup : public ModelClient {
   public:
    std::string name() const override { return "dup"; }
    std::string chat(const ChatRequest&) override { return R"j({"reasoning": "", "answer": [1, 1, 2]})j"; }
  } dup;
  const auto k = run_choice_task(base_cfg("ranking"), data, dup);
  for (const auto& rec : k.records) {
    EXPECT_TRUE(has_flag(rec, "malformed"));
    EXPECT_EQ(rec.scores.at("ranking_both"), 0.0);
  }
}

TEST(Runner, RetryThenFlag) {
  const auto data = first(2);
  class Flaky : public ModelClient {
   public:
    std::atomic<int> calls{0};
    std::string name() const override { return "flaky"; }
    std::string chat(const ChatRequest&) override {
      if (++calls % 3 != 0) throw ClientError("503");
      return R"j({"reasoning": "", "answer": 1})j";
    }
  } flaky;
  auto cfg = base_cfg("most_similar");
  cfg.concurrency = 1;
  const auto r = run_choice_task(cfg, data, flaky);
  ASSERT_EQ(r.records.size(), 10u);
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.attempts, 3);
    EXPECT_FALSE(has_flag(rec, "client_error"));
  }

  class Down : public ModelClient {
   public:
    std::string name() const override { return "down"; }
    std::string chat(const ChatRequest&) override { throw ClientError("down"); }
  } down;
  const auto d = run_choice_task(cfg, data, down);
  ASSERT_EQ(d.records.size(), 10u);
  EXPECT_EQ(d.report.records.size(), 10u);
  for (const auto& rec : d.records) {
    EXPECT_TRUE(has_flag(rec, "client_error"));
    EXPECT_EQ(rec.attempts, cfg.max_attempts);
  }
}

namespace {

// p shares the Original's vector; Equivalent sits close to it, the negation
// pair points away, everything else gets its own axis.
class GeometryEmbedding : public ModelClient {
 public:
  GeometryEmbedding(const std::vector<fol::Instance>& data, const RunConfig& cfg) {
    std::size_t axis = 0;
    auto fresh = [&] { return axis++; };
    for (const auto& inst : data)
      for (auto seed : cfg.seeds) {
        const auto set = plan_choice_task(inst, cfg, seed);
        const auto& orig = set.at_position(set.answers.original).text;
        if (!axes_.count(orig)) axes_[orig] = {fresh(), 1.0};
        axes_[inst.utterance] = axes_[orig];
        const auto base = axes_[orig].first;
        if (set.answers.equivalent) axes_[set.at_position(*set.answers.equivalent).text] = {base, 0.99};
        if (set.answers.negation) axes_[set.at_position(*set.answers.negation).text] = {base, -1.0};
        if (set.answers.negation_nnf) axes_[set.at_position(*set.answers.negation_nnf).text] = {base, -1.0};
        for (const auto& c : set.candidates)
          if (!axes_.count(c.text)) axes_[c.text] = {fresh(), 1.0};
      }
    dim_ = axis + 1;
  }
  std::string name() const override { return "geometry"; }
  std::vector<double> embed(const std::string& text, const std::optional<std::string>&) override {
    ++calls;
    std::vector<double> v(dim_, 0.0);
    const auto [a, w] = axes_.at(text);
    v[a] = w;
    if (w != 1.0 && w != -1.0) v[dim_ - 1] = std::sqrt(1 - w * w);
    return v;
  }
  std::atomic<int> calls{0};

 private:
  std::map<std::string, std::pair<std::size_t, double>> axes_;
  std::size_t dim_ = 1;
};

}  // namespace

TEST(Embedding, GeometryScoresOne) {
  const auto data = first(10);
  auto ms = base_cfg("most_similar");
  ms.model.kind = "embedding";
  GeometryEmbedding g1(data, ms);
  const auto r = run_embedding_task(ms, data, g1);
  EXPECT_DOUBLE_EQ(mean_of(r, "most_similar"), 1.0);

  auto rk = base_cfg("ranking");
  rk.model.kind = "embedding";
  GeometryEmbedding g2(data, rk);
  const auto k = run_embedding_task(rk, data, g2);
  EXPECT_DOUBLE_EQ(mean_of(k, "ranking_both"), 1.0);
  // Each distinct text is embedded once.
  std::set<std::string> texts;
  for (const auto& inst : data) {
    texts.insert(inst.utterance);
    for (auto s : rk.seeds)
      for (const auto& c : plan_choice_task(inst, rk, s).candidates) texts.insert(c.text);
  }
  EXPECT_EQ(static_cast<std::size_t>(g2.calls.load()), texts.size());
}

TEST(Embedding, RandomVectorsNearChance) {
  auto cfg = base_cfg("most_similar");
  cfg.model.kind = "embedding";
  cfg.solver.oracle_checks = false;
  cfg.seeds.clear();
  for (std::uint64_t s = 1; s <= 20; ++s) cfg.seeds.push_back(s);
  HashEmbeddingClient hash(512, 7);
  const auto r = run_embedding_task(cfg, tarski(), hash);
  ASSERT_EQ(r.records.size(), 1000u);
  double expected = 0, var = 0, hits = 0;
  for (const auto& rec : r.records) {
    const double p = 1.0 / static_cast<double>(rec.verdict.at("candidates").size());
    expected += p;
    var += p * (1 - p);
    hits += rec.scores.at("most_similar");
  }
  const double n = static_cast<double>(r.records.size());
  EXPECT_LE(std::abs(hits / n - expected / n), 3 * std::sqrt(var) / n);
}

TEST(Embedding, TiesAndDimensions) {
  const auto data = first(3);
  auto cfg = base_cfg("most_similar");
  cfg.model.kind = "embedding";
  class Flat : public ModelClient {
   public:
    std::string name() const override { return "flat"; }
    std::vector<double> embed(const std::string&, const std::optional<std::string>&) override { return {1, 0}; }
  } flat;
  const auto r = run_embedding_task(cfg, data, flat);
  for (const auto& rec : r.records) {
    EXPECT_TRUE(has_flag(rec, "tie"));
    EXPECT_EQ(rec.parsed.at("choice"), 1);
  }

  class Ragged : public ModelClient {
   public:
    std::string name() const override { return "ragged"; }
    std::vector<double> embed(const std::string& t, const std::optional<std::string>&) override {
      return std::vector<double>(t.size() % 2 ? 3 : 4, 1.0);
    }
  } ragged;
  const auto d = run_embedding_task(cfg, data, ragged);
  for (const auto& rec : d.records) {
    EXPECT_TRUE(has_flag(rec, "dimension_mismatch"));
    EXPECT_EQ(rec.scores.at("most_similar"), 0.0);
  }
}

TEST(Runner, WritesReproducibleRunDirectory) {
  const auto tmp = std::filesystem::temp_directory_path() / "folbench_harness_test";
  std::filesystem::remove_all(tmp);
  auto cfg = base_cfg("ranking", Variant::NL);
  cfg.dataset = (kFixtures / "tarski50.jsonl").string();
  cfg.output_dir = tmp.string();
  cfg.solver.keep_smt = true;
  FixedAnswerMock fixed;
  const auto a = run_benchmark(cfg, fixed);
  const auto b = run_benchmark(cfg, fixed);
  ASSERT_TRUE(a.run_dir);
  EXPECT_EQ(a.run_id, b.run_id);
  EXPECT_EQ(a.report.to_json(), b.report.to_json());
  for (const auto* f : {"config.json", "records.jsonl", "report.json", "report.csv"})
    EXPECT_TRUE(std::filesystem::exists(*a.run_dir / f)) << f;
  EXPECT_TRUE(std::filesystem::is_directory(*a.run_dir / "smt"));
  EXPECT_EQ(slurp(*a.run_dir / "report.csv").substr(0, 40), "instance_id,seed,task,variant,score,flag");

  // Replaying the recorded replies reproduces the report.
  ReplayMock replay(*a.run_dir / "records.jsonl");
  const auto c = run_task(cfg, tarski(), replay);
  EXPECT_EQ(c.report.to_json(), a.report.to_json());
  std::filesystem::remove_all(tmp);
}

TEST(Client, ChatBody) {
  ChatRequest req;
  req.system = "s";
  req.user = "u";
  req.seed = 26;
  req.schema = output_schema("most_similar");
  const auto body = chat_request_body(req, "m");
  EXPECT_EQ(body["messages"][0]["role"], "system");
  EXPECT_EQ(body["messages"][1]["content"], "u");
  EXPECT_EQ(body["seed"], 26);
  EXPECT_EQ(body["max_completion_tokens"], 2500);
  EXPECT_EQ(body["response_format"]["json_schema"]["schema"], req.schema);
}

TEST(Client, HashEmbeddingDeterministic) {
  HashEmbeddingClient h(64);
  const auto v = h.embed("Cube(a)", std::nullopt);
  EXPECT_EQ(v, h.embed("Cube(a)", std::nullopt));
  EXPECT_NE(v, h.embed("Cube(a)", std::string("Encode: ")));
  double norm = 0;
  for (double x : v) norm += x * x;
  EXPECT_NEAR(norm, 1.0, 1e-12);
  EXPECT_THROW(FixedAnswerMock().embed("x", std::nullopt), ClientError);
}

TEST(Client, UnreachableEndpoint) {
  HttpChatClient c({"http://127.0.0.1:9/v1/chat/completions", "m", "FOLBENCH_API_TOKEN", 2});
  EXPECT_THROW(c.chat(ChatRequest{}), ClientError);
  EXPECT_THROW(HttpChatClient({"not a url", "m"}).chat(ChatRequest{}), ConfigError);
}
