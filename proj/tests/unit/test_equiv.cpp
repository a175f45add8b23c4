#include <gtest/gtest.h>

#include "folbench/equiv/brute_force.hpp"
#include "folbench/equiv/smtlib.hpp"
#include "folbench/equiv/solver.hpp"
#include "folbench/errors.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/fol/parser.hpp"
#include "formula_gen.hpp"

using namespace folbench;
using namespace folbench::equiv;
using fol::Formula;
using fol::parse_formula;

namespace {

fol::Signature turtle_sig() {
  fol::Signature s;
  for (auto p : {"Turtle", "Shell", "CanSwim", "T", "S"}) s.add_predicate(p, 1);
  return s;
}

SolverConfig solver_cfg() {
  SolverConfig c;
#ifdef FOLBENCH_SOLVER_PATH
  c.path = FOLBENCH_SOLVER_PATH;
#endif
  return c;
}

#define REQUIRE_SOLVER() \
  if (!solver_available(solver_cfg())) GTEST_SKIP() << "no SMT solver on this machine"

}  // namespace

TEST(Eval, EmptyTurtleWorld) {
  const auto sig = turtle_sig();
  SigmaStructure s;
  s.complete_for(sig);
  EXPECT_FALSE(eval(parse_formula("∃x (Turtle(x) ∧ Shell(x))", sig), s));
  EXPECT_TRUE(eval(parse_formula("∀x (Turtle(x) → Shell(x))", sig), s));
  EXPECT_TRUE(eval(parse_formula("∃x (Turtle(x) → Shell(x) ∧ CanSwim(x))", sig), s));
  EXPECT_FALSE(eval(parse_formula("∃x (Turtle(x) ∧ Shell(x) ∧ CanSwim(x))", sig), s));
}

TEST(Eval, AgreesWithNaiveEvaluator) {
  const auto sig = testkit::small_signature();
  Rng rng(5);
  for (int i = 0; i < 3000; ++i) {
    const auto f = testkit::random_closed_formula(rng, sig);
    const auto s = testkit::random_structure(rng, sig, 1 + rng.below(3));
    EXPECT_EQ(eval(f, s), testkit::naive_eval(f, s));
  }
}

TEST(Eval, OpenFormulaUnderAssignment) {
  const auto sig = testkit::small_signature();
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const auto f = testkit::random_open_formula(rng, sig, {"x", "y"});
    const auto s = testkit::random_structure(rng, sig, 3);
    const Element x = rng.below(3), y = rng.below(3);
    EXPECT_EQ(eval(f, s, {{"x", x}, {"y", y}}), testkit::naive_eval(f, s, {{"x", x}, {"y", y}}));
  }
}

TEST(BruteForce, IdenticalFormulasExhaustBound) {
  fol::Signature s;
  s.add_predicate("P", 1);
  s.add_constant("a");
  const auto f = parse_formula("P(a)", s);
  const auto v = brute_force_check(f, f, s);
  EXPECT_TRUE(v.unknown());
  EXPECT_EQ(v.reason, UnknownReason::BoundExhausted);
  EXPECT_FALSE(v.witness);
}

TEST(BruteForce, SizeOneWitness) {
  const auto sig = turtle_sig();
  BruteForceOptions o;
  o.max_domain = 1;
  const auto v = brute_force_check(parse_formula("∃x (T(x) ∧ S(x))", sig),
                                   parse_formula("∀x (T(x) → S(x))", sig), sig, o);
  ASSERT_TRUE(v.not_equivalent());
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->domain_size, 1u);
  EXPECT_TRUE(v.witness->predicates.at("T").empty());
  EXPECT_TRUE(v.witness->predicates.at("S").empty());
}

TEST(BruteForce, BudgetMustBePositive) {
  const auto sig = turtle_sig();
  const auto f = parse_formula("∃x T(x)", sig);
  BruteForceOptions o;
  o.budget = 0;
  EXPECT_THROW(brute_force_check(f, f, sig, o), BudgetExceeded);
}

TEST(BruteForce, RejectsOpenFormulas) {
  const auto sig = turtle_sig();
  EXPECT_ANY_THROW(brute_force_check(parse_formula("T(x)", sig), parse_formula("T(x)", sig), sig));
}

TEST(BruteForce, ParallelMatchesSerial) {
  const auto sig = testkit::small_signature();
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto f = testkit::random_closed_formula(rng, sig);
    const auto g = testkit::random_closed_formula(rng, sig);
    BruteForceOptions o;
    o.seed = i;
    o.budget = 50'000;
    const auto a = brute_force_check(f, g, sig, o);
    const auto b = brute_force_check_serial(f, g, sig, o);
    ASSERT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.witness, b.witness);
    if (a.witness) EXPECT_NE(eval(f, *a.witness), eval(g, *a.witness));
  }
}

TEST(BruteForce, NnfNeverRefuted) {
  const auto sig = testkit::small_signature();
  Rng rng(33);
  for (int i = 0; i < 300; ++i) {
    const auto f = testkit::random_closed_formula(rng, sig);
    EXPECT_FALSE(brute_force_check(f, fol::to_nnf(f), sig).not_equivalent());
  }
}

TEST(BruteForce, WitnessIsExhaustivelyMinimalAtSmallSizes) {
  // ∀x∃y R(x,y) vs ∃y∀x R(x,y) first differ at domain size 2.
  const auto sig = testkit::small_signature();
  const auto v = brute_force_check(parse_formula("∀x ∃y R(x,y)", sig),
                                   parse_formula("∃y ∀x R(x,y)", sig), sig);
  ASSERT_TRUE(v.not_equivalent());
  EXPECT_EQ(v.witness->domain_size, 2u);
}

TEST(BruteForce, FunctionsEnumerated) {
  fol::Signature s;
  s.add_predicate("P", 1);
  s.add_function("f", 1);
  s.add_constant("a");
  const auto v = brute_force_check(parse_formula("P(f(a))", s), parse_formula("P(a)", s), s);
  ASSERT_TRUE(v.not_equivalent());
  EXPECT_NE(eval(parse_formula("P(f(a))", s), *v.witness), eval(parse_formula("P(a)", s), *v.witness));
}

TEST(SmtLib, ScriptShape) {
  const auto sig = turtle_sig();
  const auto f = parse_formula("∀x (T(x) → S(x))", sig);
  const auto g = parse_formula("∀x (¬T(x) ∨ S(x))", sig);
  const auto script = emit_smtlib(f, g, sig);
  EXPECT_EQ(script, emit_smtlib(f, g, sig));
  EXPECT_NE(script.find("(declare-sort U 0)"), std::string::npos);
  EXPECT_NE(script.find("(declare-fun p_T (U) Bool)"), std::string::npos);
  EXPECT_NE(script.find("(assert (not (= (forall ((v_x U)) (=> (p_T v_x) (p_S v_x)))"),
            std::string::npos);
  EXPECT_EQ(script.substr(script.size() - 12), "(check-sat)\n");
}

TEST(SmtLib, SymbolsRoundTrip) {
  const auto s = smt_symbol(SmtSymbolKind::Predicate, "EUCountry");
  EXPECT_EQ(s, "p_EUCountry");
  EXPECT_EQ(parse_smt_symbol(s)->second, "EUCountry");
}

TEST(ModelReader, Z3StyleModel) {
  fol::Signature s;
  s.add_predicate("T", 1);
  s.add_constant("a");
  const std::string model = R"((
  ;; universe for U:
  ;;   U!val!1 U!val!0
  ;; -----------
  (declare-fun U!val!1 () U)
  (declare-fun U!val!0 () U)
  ;; cardinality constraint:
  (forall ((x U)) (or (= x U!val!1) (= x U!val!0)))
  ;; -----------
  (define-fun c_a () U
    U!val!1)
  (define-fun p_T ((x!0 U)) Bool
    (ite (= x!0 U!val!1) false true))
))";
  const auto st = read_smt_model(model, s);
  ASSERT_TRUE(st);
  EXPECT_EQ(st->domain_size, 2u);
  EXPECT_EQ(st->constants.at("a"), 1u);
  EXPECT_EQ(st->predicates.at("T"), (std::set<Tuple>{{0}}));
}

TEST(Solver, EquivalentAndNot) {
  REQUIRE_SOLVER();
  fol::Signature s;
  s.add_predicate("P", 1);
  s.add_predicate("Q", 1);
  s.add_constant("a");
  const auto cfg = solver_cfg();
  EXPECT_TRUE(solver_check(parse_formula("P(a)", s), parse_formula("P(a)", s), s, cfg).equivalent());
  EXPECT_TRUE(solver_check(parse_formula("P(a) → Q(a)", s), parse_formula("¬P(a) ∨ Q(a)", s), s, cfg)
                  .equivalent());
  const auto v = solver_check(parse_formula("∀x P(x)", s), parse_formula("¬∀x P(x)", s), s, cfg);
  ASSERT_TRUE(v.not_equivalent());
  ASSERT_TRUE(v.witness);
}

TEST(Solver, MusicianExample) {
  REQUIRE_SOLVER();
  fol::Signature s;
  s.add_predicate("Musician", 1);
  s.add_predicate("Love", 2);
  s.add_constant("music");
  const auto f = parse_formula("∃x (Musician(x) → Love(x, music))", s);
  const auto g = parse_formula("∃x (Musician(x) ∧ Love(x, music))", s);
  const auto v = solver_check(f, g, s, solver_cfg());
  ASSERT_TRUE(v.not_equivalent());
  ASSERT_TRUE(v.witness);
  EXPECT_NE(eval(f, *v.witness), eval(g, *v.witness));
}

TEST(Solver, MissingExecutable) {
  fol::Signature s;
  s.add_predicate("P", 1);
  s.add_constant("a");
  SolverConfig c;
  c.path = "/nonexistent/solver-binary";
  const auto f = parse_formula("P(a)", s);
  EXPECT_THROW(solver_check(f, f, s, c), SolverNotFound);
}

TEST(Solver, GarbageOutputIsCrash) {
  fol::Signature s;
  s.add_predicate("P", 1);
  s.add_constant("a");
  SolverConfig c;
  c.path = "/bin/echo";
  c.args = {"hello"};
  const auto f = parse_formula("P(a)", s);
  EXPECT_THROW(solver_check(f, f, s, c), SolverCrashed);
}
