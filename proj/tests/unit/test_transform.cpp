#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "folbench/equiv/brute_force.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/fol/parser.hpp"
#include "folbench/fol/printer.hpp"
#include "folbench/transform/candidates.hpp"
#include "folbench/transform/sites.hpp"
#include "formula_gen.hpp"

using namespace folbench;
using namespace folbench::transform;
using fol::Formula;
using fol::parse_formula;

namespace {

fol::Signature pq_sig() {
  fol::Signature s;
  s.add_predicate("P", 1);
  s.add_predicate("Q", 1);
  s.add_predicate("A", 1);
  s.add_predicate("B", 1);
  s.add_constant("a");
  return s;
}

std::set<std::string> printed(const std::vector<Perturbation>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(fol::print_formula(p.formula));
  return out;
}

std::shared_ptr<const fol::Ontology> country_ontology() {
  auto o = std::make_shared<fol::Ontology>();
  o->signature.add_predicate("Country", 1);
  o->signature.add_predicate("InEU", 1);
  o->signature.add_predicate("EUCountry", 1);
  o->glossary.predicates["Country"] = {"x1 is a country", "x1 is not a country"};
  o->glossary.predicates["InEU"] = {"x1 is in the EU", "x1 is not in the EU"};
  o->glossary.predicates["EUCountry"] = {"x1 is an EU country", "x1 is not an EU country"};
  return o;
}

fol::Instance country_instance() {
  auto o = country_ontology();
  return {"c1", "Every country in the EU is an EU country.",
          parse_formula("∀x Country(x) ∧ InEU(x) → EUCountry(x)", o->signature), o};
}

// Counts nodes that differ between two trees of equal shape; -1 when the
// shapes differ.
int node_diff(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return -1;
  switch (a.kind()) {
    case fol::FormulaKind::Atom: return a == b ? 0 : 1;
    case fol::FormulaKind::Not: return node_diff(a.operand(), b.operand());
    case fol::FormulaKind::Quantified: {
      const int d = node_diff(a.body(), b.body());
      return d < 0 ? d : d + (a.quantifier() != b.quantifier() || a.variable() != b.variable());
    }
    case fol::FormulaKind::Binary: {
      const int l = node_diff(a.left(), b.left()), r = node_diff(a.right(), b.right());
      if (l < 0 || r < 0) return -1;
      return l + r + (a.connective() != b.connective());
    }
  }
  return -1;
}

// One substitution, or one ¬ inserted/removed somewhere.
bool one_edit_apart(const Formula& a, const Formula& b) {
  if (node_diff(a, b) == 1) return true;
  const auto wrap = [](const Formula& big, const Formula& small) {
    for (std::size_t s = 0; s < big.size(); ++s) {
      const auto& n = subformula_at(big, s);
      if (n.is_not() && replace_at(big, s, [](const Formula& x) { return x.operand(); }) == small)
        return true;
    }
    return false;
  };
  return wrap(a, b) || wrap(b, a);
}

}  // namespace

TEST(Perturb, Atom) {
  const auto s = pq_sig();
  const auto ps = enumerate_perturbations(parse_formula("P(a)", s));
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(fol::print_formula(ps[0].formula), "¬P(a)");
  EXPECT_EQ(ps[0].kind, EditKind::NegationInsert);
}

TEST(Perturb, Universal) {
  const auto s = pq_sig();
  const auto ps = enumerate_perturbations(parse_formula("∀x P(x)", s));
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(fol::print_formula(ps[0].formula), "∃x P(x)");
  EXPECT_EQ(fol::print_formula(ps[1].formula), "∀x ¬P(x)");
  EXPECT_EQ(ps[1].site_index, 1u);
}

TEST(Perturb, Conjunction) {
  const auto s = pq_sig();
  EXPECT_EQ(printed(enumerate_perturbations(parse_formula("P(a) ∧ Q(a)", s))),
            (std::set<std::string>{"P(a) ∨ Q(a)", "P(a) → Q(a)", "P(a) ↔ Q(a)", "¬P(a) ∧ Q(a)",
                                   "P(a) ∧ ¬Q(a)"}));
}

TEST(Perturb, NegativeLiteralIsStripped) {
  const auto s = pq_sig();
  const auto ps = enumerate_perturbations(parse_formula("¬P(a) ∨ Q(a)", s));
  EXPECT_EQ(printed(ps), (std::set<std::string>{"¬P(a) ∧ Q(a)", "¬P(a) → Q(a)", "¬P(a) ↔ Q(a)",
                                                "P(a) ∨ Q(a)", "¬P(a) ∨ ¬Q(a)"}));
}

TEST(Perturb, PropertiesOnRandomFormulas) {
  const auto sig = testkit::small_signature();
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto f = testkit::random_closed_formula(rng, sig);
    const auto ps = enumerate_perturbations(f);
    ASSERT_FALSE(ps.empty());
    for (std::size_t a = 0; a < ps.size(); ++a) {
      EXPECT_NE(ps[a].formula, f);
      EXPECT_TRUE(one_edit_apart(f, ps[a].formula))
          << fol::print_formula(f) << " vs " << fol::print_formula(ps[a].formula);
      EXPECT_TRUE(fol::is_closed(ps[a].formula));
      for (std::size_t b = a + 1; b < ps.size(); ++b) EXPECT_NE(ps[a].formula, ps[b].formula);
    }
  }
}

TEST(Perturb, SampleDeterministicAndCapped) {
  const auto s = pq_sig();
  EXPECT_EQ(sample_perturbations(parse_formula("P(a)", s), 8, 3).size(), 1u);
  const auto f = parse_formula("∀x P(x)", s);
  const auto a = sample_perturbations(f, 1, 99), b = sample_perturbations(f, 1, 99);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].formula, b[0].formula);

  const auto phi = country_instance().formula;
  const auto all = printed(enumerate_perturbations(phi));
  const auto eight = sample_perturbations(phi, 8, 3);
  ASSERT_EQ(eight.size(), 8u);
  std::set<std::string> seen;
  for (const auto& p : eight) {
    EXPECT_NE(p.formula, phi);
    EXPECT_TRUE(all.count(fol::print_formula(p.formula)));
    seen.insert(fol::print_formula(p.formula));
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(Rewrite, RuleExamples) {
  const auto s = pq_sig();
  EXPECT_EQ(*rewrite_node(parse_formula("P(a)", s), RewriteRule::DoubleNegation),
            parse_formula("¬¬P(a)", s));
  EXPECT_EQ(*rewrite_node(parse_formula("A(x) ∧ B(x)", s), RewriteRule::Commutativity),
            parse_formula("B(x) ∧ A(x)", s));
  EXPECT_EQ(*rewrite_node(parse_formula("P(x) → Q(x)", s), RewriteRule::ImplicationExpansion),
            parse_formula("¬P(x) ∨ Q(x)", s));
  EXPECT_EQ(*rewrite_node(parse_formula("¬(P(x) ∧ Q(x))", s), RewriteRule::DeMorgan),
            parse_formula("¬P(x) ∨ ¬Q(x)", s));
  EXPECT_EQ(*rewrite_node(parse_formula("¬P(x) ∧ ¬Q(x)", s), RewriteRule::DeMorgan),
            parse_formula("¬(P(x) ∨ Q(x))", s));
  EXPECT_EQ(*rewrite_node(parse_formula("A(x) ∧ (P(x) ∨ Q(x))", s), RewriteRule::Distributivity),
            parse_formula("A(x) ∧ P(x) ∨ A(x) ∧ Q(x)", s));
  EXPECT_FALSE(rewrite_node(parse_formula("P(x) ∧ P(x)", s), RewriteRule::Commutativity));
  EXPECT_FALSE(rewrite_node(parse_formula("P(x) → Q(x)", s), RewriteRule::Commutativity));
  EXPECT_FALSE(rewrite_node(parse_formula("¬P(x)", s), RewriteRule::DoubleNegation));
}

TEST(Rewrite, AtomOnlyDoubleNegation) {
  const auto s = pq_sig();
  const auto r = equivalent_rewrite(parse_formula("P(a)", s), 17);
  EXPECT_EQ(r.rule, RewriteRule::DoubleNegation);
  EXPECT_EQ(fol::print_formula(r.formula), "¬¬P(a)");
}

TEST(Rewrite, SoundOnRandomFormulas) {
  const auto sig = testkit::small_signature();
  Rng rng(8);
  for (int i = 0; i < 400; ++i) {
    const auto f = testkit::random_closed_formula(rng, sig);
    for (const auto& site : applicable_rewrites(f)) {
      const auto g = apply_rewrite(f, site);
      ASSERT_NE(g, f);
      EXPECT_FALSE(equiv::brute_force_check(f, g, sig).not_equivalent())
          << rule_name(site.rule) << " on " << fol::print_formula(f);
    }
  }
}

TEST(Rewrite, Deterministic) {
  const auto phi = country_instance().formula;
  EXPECT_EQ(equivalent_rewrite(phi, 5).formula, equivalent_rewrite(phi, 5).formula);
}

TEST(Candidates, MostSimilarSizes) {
  const auto inst = country_instance();
  const auto set = build_most_similar(inst, 8, 3, Variant::FOL);
  EXPECT_EQ(set.size(), 9u);
  EXPECT_EQ(set.at_position(set.answers.original).formula, inst.formula);
  EXPECT_EQ(std::count_if(set.candidates.begin(), set.candidates.end(),
                          [](const Candidate& c) { return c.label.kind == LabelKind::Original; }),
            1);

  auto o = std::make_shared<fol::Ontology>();
  o->signature.add_predicate("P", 1);
  o->signature.add_constant("a");
  o->glossary.predicates["P"] = {"x1 is p", "x1 is not p"};
  o->glossary.constants["a"] = "a";
  fol::Instance atom{"atom", "a is p", parse_formula("P(a)", o->signature), o};
  EXPECT_EQ(build_most_similar(atom, 8, 3, Variant::FOL).size(), 2u);
}

TEST(Candidates, RankingLabelsPartition) {
  const auto inst = country_instance();
  const auto set = build_ranking(inst, 3, 12, Variant::FOL);
  ASSERT_EQ(set.size(), 7u);
  std::map<LabelKind, int> counts;
  for (const auto& c : set.candidates) ++counts[c.label.kind];
  EXPECT_EQ(counts[LabelKind::Original], 1);
  EXPECT_EQ(counts[LabelKind::Perturbation], 3);
  EXPECT_EQ(counts[LabelKind::Negation], 1);
  EXPECT_EQ(counts[LabelKind::NegationNNF], 1);
  EXPECT_EQ(counts[LabelKind::Equivalent], 1);
  EXPECT_EQ(set.at_position(*set.answers.negation).formula, fol::negate(inst.formula));
  EXPECT_EQ(set.at_position(*set.answers.negation_nnf).formula, fol::to_nnf(fol::negate(inst.formula)));
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      EXPECT_NE(set.candidates[a].formula, set.candidates[b].formula);
  EXPECT_FALSE(set.degenerate_negation);
}

TEST(Candidates, NegationNnfOfImplication) {
  const auto s = pq_sig();
  EXPECT_EQ(fol::to_nnf(fol::negate(parse_formula("∀x (P(x) → Q(x))", s))),
            parse_formula("∃x (P(x) ∧ ¬Q(x))", s));
}

TEST(Candidates, DegenerateNegationKept) {
  auto o = std::make_shared<fol::Ontology>();
  o->signature.add_predicate("P", 1);
  o->signature.add_constant("a");
  o->glossary.predicates["P"] = {"x1 is p", "x1 is not p"};
  o->glossary.constants["a"] = "a";
  fol::Instance atom{"atom", "a is p", parse_formula("P(a)", o->signature), o};
  const auto set = build_ranking(atom, 3, 3, Variant::FOL);
  EXPECT_TRUE(set.degenerate_negation);
  // ¬P(a) is both the only perturbation and the negation, so no perturbation is left.
  EXPECT_EQ(set.size(), 4u);
}

TEST(Candidates, DeterministicSerialisation) {
  const auto inst = country_instance();
  for (auto v : {Variant::FOL, Variant::NL}) {
    const auto a = build_ranking(inst, 3, 26, v), b = build_ranking(inst, 3, 26, v);
    EXPECT_EQ(candidate_set_payload(a).dump(), candidate_set_payload(b).dump());
    EXPECT_EQ(candidate_set_ground_truth(a).dump(), candidate_set_ground_truth(b).dump());
  }
  const auto f = build_most_similar(inst, 8, 85, Variant::FOL);
  const auto n = build_most_similar(inst, 8, 85, Variant::NL);
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(f.candidates[i].formula, n.candidates[i].formula);
  EXPECT_EQ(n.at_position(n.answers.original).text, "For all x if x is a country and x is in the EU, then x is an EU country.");
}

TEST(Candidates, PayloadHasNoLabels) {
  const auto set = build_ranking(country_instance(), 3, 107, Variant::FOL);
  const auto text = candidate_set_payload(set).dump();
  for (auto word : {"original", "negation", "equivalent", "perturbation", "answer"})
    EXPECT_EQ(text.find(word), std::string::npos) << word;
}

TEST(Candidates, VacuousFlipFlagged) {
  auto o = std::make_shared<fol::Ontology>();
  o->signature.add_predicate("P", 1);
  o->signature.add_constant("a");
  o->glossary.predicates["P"] = {"x1 is p", "x1 is not p"};
  o->glossary.constants["a"] = "a";
  fol::Instance inst{"vac", "", parse_formula("∀x P(a)", o->signature), o};
  const auto set = build_most_similar(inst, 8, 3, Variant::FOL);
  bool saw = false;
  for (const auto& c : set.candidates)
    if (c.label.kind == LabelKind::Perturbation && c.label.edit == EditKind::QuantifierFlip) {
      EXPECT_TRUE(c.equiv_to_original);
      saw = true;
    }
  EXPECT_TRUE(saw);
}
