#include <gtest/gtest.h>

#include "folbench/errors.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/fol/ontology_io.hpp"
#include "folbench/fol/parser.hpp"
#include "folbench/fol/printer.hpp"
#include "formula_gen.hpp"

using namespace folbench;
using namespace folbench::fol;

namespace {

Signature country_sig() {
  Signature s;
  s.add_predicate("Country", 1);
  s.add_predicate("InEU", 1);
  s.add_predicate("EUCountry", 1);
  return s;
}

Formula A(const char* p, const char* v = "x") { return Formula::atom(p, {Term::variable(v)}); }

}  // namespace

TEST(Parse, CountryFormulaQuantifierTakesWholeBody) {
  const auto f = parse_formula("∀x Country(x) ∧ InEU(x) → EUCountry(x)", country_sig());
  const auto want =
      Formula::forall("x", Formula::implies(Formula::conj(A("Country"), A("InEU")), A("EUCountry")));
  EXPECT_EQ(f, want);
}

TEST(Parse, ConstantArgument) {
  Signature s;
  s.add_predicate("P", 1);
  s.add_constant("a");
  EXPECT_EQ(parse_formula("P(a)", s), Formula::atom("P", {Term::constant("a")}));
}

TEST(Parse, ParenthesesOverride) {
  Signature s;
  s.add_predicate("A", 1);
  s.add_predicate("B", 1);
  EXPECT_EQ(parse_formula("¬(A(x) ∨ B(x))", s), Formula::negation(Formula::disj(A("A"), A("B"))));
  EXPECT_EQ(parse_formula("¬A(x) ∨ B(x)", s), Formula::disj(Formula::negation(A("A")), A("B")));
}

TEST(Parse, Associativity) {
  Signature s;
  for (auto p : {"A", "B", "C"}) s.add_predicate(p, 1);
  EXPECT_EQ(parse_formula("A(x) ∧ B(x) ∧ C(x)", s),
            Formula::conj(Formula::conj(A("A"), A("B")), A("C")));
  EXPECT_EQ(parse_formula("A(x) → B(x) → C(x)", s),
            Formula::implies(A("A"), Formula::implies(A("B"), A("C"))));
  EXPECT_EQ(parse_formula("A(x) ↔ B(x) ↔ C(x)", s),
            Formula::iff(A("A"), Formula::iff(A("B"), A("C"))));
}

TEST(Parse, AsciiAliases) {
  const auto sig = country_sig();
  EXPECT_EQ(parse_formula("forall x (Country(x) & InEU(x) -> EUCountry(x))", sig),
            parse_formula("∀x (Country(x) ∧ InEU(x) → EUCountry(x))", sig));
  EXPECT_EQ(parse_formula("exists x. (!Country(x) | InEU(x) <-> EUCountry(x))", sig),
            parse_formula("∃x (¬Country(x) ∨ InEU(x) ↔ EUCountry(x))", sig));
}

TEST(Parse, Errors) {
  const auto sig = country_sig();
  EXPECT_THROW(parse_formula("Country(x", sig), SyntaxError);
  EXPECT_THROW(parse_formula("", sig), SyntaxError);
  EXPECT_THROW(parse_formula("Unknown(x)", sig), UnknownSymbol);
  EXPECT_THROW(parse_formula("Country(x, y)", sig), ArityMismatch);
  try {
    parse_formula("Country(x) ∧", sig);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 14u);
  }
}

TEST(Parse, XorRejectedUnlessExpanded) {
  const auto sig = country_sig();
  EXPECT_THROW(parse_formula("Country(x) ⊕ InEU(x)", sig), XorRejected);
  ParseOptions o;
  o.expand_xor = true;
  EXPECT_EQ(parse_formula("Country(x) ⊕ InEU(x)", sig, o),
            Formula::conj(Formula::disj(A("Country"), A("InEU")),
                          Formula::negation(Formula::conj(A("Country"), A("InEU")))));
}

TEST(Parse, ShadowingWarns) {
  Signature s;
  s.add_predicate("P", 1);
  const auto r = parse_formula_detailed("∀x ∃x P(x)", s);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Parse, InferringMode) {
  const auto r = parse_formula_inferring("∀x (Musician(x) → Love(x, music))");
  EXPECT_TRUE(r.signature.has_constant("music"));
  EXPECT_EQ(r.signature.predicate_arity("Love"), 2u);
  EXPECT_TRUE(is_closed(r.formula));
}

TEST(Print, Examples) {
  EXPECT_EQ(print_formula(Formula::forall("x", A("P"))), "∀x P(x)");
  EXPECT_EQ(print_formula(Formula::conj(A("P"), A("Q"))), "P(x) ∧ Q(x)");
  EXPECT_EQ(print_formula(Formula::implies(Formula::conj(A("P"), A("Q")), A("R"))),
            "P(x) ∧ Q(x) → R(x)");
  EXPECT_EQ(print_formula(Formula::conj(Formula::forall("x", A("P")), A("Q", "y"))),
            "(∀x P(x)) ∧ Q(y)");
  EXPECT_EQ(print_formula(Formula::atom("Love", {Term::variable("x"), Term::constant("music")})),
            "Love(x,music)");
}

TEST(Print, RoundTripOnRandomFormulas) {
  const auto sig = testkit::small_signature();
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto f = testkit::random_closed_formula(rng, sig);
    const auto text = print_formula(f);
    EXPECT_EQ(parse_formula(text, sig), f) << text;
  }
}

TEST(Nnf, Examples) {
  Signature s;
  for (auto p : {"A", "B", "P", "Q"}) s.add_predicate(p, 1);
  EXPECT_EQ(to_nnf(parse_formula("¬(A(x) ∧ B(x))", s)), parse_formula("¬A(x) ∨ ¬B(x)", s));
  EXPECT_EQ(to_nnf(parse_formula("¬∀x P(x)", s)), parse_formula("∃x ¬P(x)", s));
  EXPECT_EQ(to_nnf(parse_formula("¬(P(x) → Q(x))", s)), parse_formula("P(x) ∧ ¬Q(x)", s));
  EXPECT_EQ(to_nnf(parse_formula("¬¬P(x)", s)), parse_formula("P(x)", s));
}

TEST(Nnf, ShapeAndIdempotence) {
  const auto sig = testkit::small_signature();
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto f = testkit::random_closed_formula(rng, sig);
    const auto n = to_nnf(f);
    EXPECT_TRUE(is_nnf(n)) << print_formula(n);
    EXPECT_EQ(to_nnf(n), n);
  }
}

TEST(Negate, Verbatim) {
  const auto p = Formula::atom("P", {Term::constant("a")});
  EXPECT_EQ(negate(p), Formula::negation(p));
  EXPECT_EQ(negate(Formula::negation(p)), Formula::negation(Formula::negation(p)));
}

TEST(FreeVars, Examples) {
  Signature s;
  s.add_predicate("P", 2);
  s.add_predicate("Q", 1);
  s.add_predicate("Love", 2);
  EXPECT_EQ(free_vars(parse_formula("∀x P(x,y)", s)), std::set<std::string>{"y"});
  EXPECT_TRUE(free_vars(parse_formula("∀x ∃y Love(x,y)", s)).empty());
  EXPECT_EQ(free_vars(parse_formula("Q(x) ∧ ∃x Q(x)", s)), std::set<std::string>{"x"});
  EXPECT_TRUE(is_closed(universal_closure(parse_formula("P(x,y) ∧ Q(z)", s))));
}

TEST(Signature, DisjointNamespaces) {
  Signature s;
  s.add_predicate("P", 1);
  EXPECT_THROW(s.add_constant("P"), InvalidSignature);
  EXPECT_THROW(s.add_function("P", 1), InvalidSignature);
}

TEST(Ontology, JsonRoundTripAndValidation) {
  const auto j = nlohmann::json::parse(R"({
    "predicates": {"Cube": {"arity": 1, "positive": "x1 is a cube", "negative": "x1 is not a cube"},
                   "Love": {"arity": 2, "positive": "x1 loves x2", "negative": "x1 doesn't love x2"}},
    "constants": {"A": "A"}})");
  const auto o = ontology_from_json(j);
  EXPECT_EQ(o.signature.predicate_arity("Love"), 2u);
  EXPECT_EQ(ontology_from_json(ontology_to_json(o)), o);

  auto bad = j;
  bad["predicates"]["Cube"]["positive"] = "x2 is a cube";
  EXPECT_THROW(ontology_from_json(bad), InvalidSignature);
}
