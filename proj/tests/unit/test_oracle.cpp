#include "doctest.h"
#include "nalc/oracle.hpp"
#include "nalc/parser.hpp"
#include "support/naive_oracle.hpp"
#include "support/random.hpp"

using namespace nalc;
using namespace nalc::testing;

namespace {
Degree D(const char* s) { return *Degree::parse(s); }
NeutrosophicAssertion Q(const char* s) { return parse_query(s); }
NeutrosophicConstraint C(const char* s) { return NeutrosophicConstraint::from(parse_query(s)); }

// domain {d0,d1,d2}: R(d0,d1)=⟨.9,.1⟩, R(d0,d2)=⟨.2,.7⟩, A(d1)=⟨.5,.4⟩, A(d2)=⟨1,0⟩
FiniteInterpretation three() {
  FiniteInterpretation I;
  I.domain = {"d0", "d1", "d2"};
  I.individuals = {{"a", 0}};
  I.roles[{"R", 0, 1}] = {D("0.9"), D("0.1")};
  I.roles[{"R", 0, 2}] = {D("0.2"), D("0.7")};
  I.concepts[{"A", 1}] = {D("0.5"), D("0.4")};
  I.concepts[{"A", 2}] = {D("1"), D("0")};
  return I;
}
}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("eval") {
    FiniteInterpretation I = three();
    CHECK(eval_concept(I, Concept::top(), 1) == DegreePair{D("1"), D("0")});
    CHECK(eval_concept(I, Concept::bottom(), 1) == DegreePair{D("0"), D("1")});
    // the existential: ⟨max(min(.9,.5),min(.2,1)), min(max(.1,.4),max(.7,0))⟩
    CHECK(eval_concept(I, parse_concept("(some R A)"), 0) == DegreePair{D("0.5"), D("0.4")});
    // d0→d0 has the default role value ⟨0,1⟩ and A(d0)=⟨0,1⟩
    CHECK(eval_concept(I, parse_concept("(all R A)"), 0) == DegreePair{D("0.5"), D("0.4")});
    I.concepts[{"A", 0}] = {D("0.6"), D("0.3")};
    CHECK(eval_concept(I, parse_concept("(not A)"), 0) == DegreePair{D("0.3"), D("0.6")});
    CHECK(eval_concept(I, parse_concept("(and A (not A))"), 0) == DegreePair{D("0.3"), D("0.6")});
    CHECK(eval_concept(I, parse_concept("(or A (not A))"), 0) == DegreePair{D("0.6"), D("0.3")});
    CHECK(eval_assertion(I, parse_assertion("R(a,a)")) == DegreePair{D("0"), D("1")});
  }

  TEST_CASE("satisfies") {
    FiniteInterpretation I;
    I.domain = {"d0"};
    I.individuals = {{"a", 0}};
    I.concepts[{"A", 0}] = {D("0.8"), D("0.1")};
    CHECK(satisfies(I, Q("A(a) >= 0.8 <= 0.1")));
    CHECK_FALSE(satisfies(I, NeutrosophicConstraint::make(parse_assertion("A(a)"), NeutrosophicConstraint::Form::GtLt,
                                                          D("0.8"), D("0.1"))));
    CHECK(satisfies(I, Q("A(a) <= 0.8 >= 0.1")));
    CHECK(satisfies(three(), Q("(some R A)(a) >= 0.5 <= 0.4")));
    // variables need an assignment
    NeutrosophicConstraint v{Assertion::of_concept(parse_concept("A"), Object::variable("x1")), Direction::Lower,
                             {D("0.8"), false}, {D("0.1"), false}};
    CHECK(satisfies(I, v, {{"x1", 0}}));
    CHECK_THROWS(satisfies(I, v));
  }

  TEST_CASE("axioms") {
    FiniteInterpretation I;
    I.domain = {"d0"};
    I.concepts[{"B", 0}] = {D("0.5"), D("0.2")};
    I.concepts[{"A", 0}] = {D("0.5"), D("0.2")};
    TerminologicalAxiom def{"A", TerminologicalAxiom::Kind::Definition, parse_concept("B")};
    TerminologicalAxiom sp{"A", TerminologicalAxiom::Kind::Specialization, parse_concept("B")};
    CHECK(satisfies_axiom(I, def));
    I.concepts[{"A", 0}] = {D("0.3"), D("0.8")};
    CHECK(satisfies_axiom(I, sp));
    CHECK_FALSE(satisfies_axiom(I, def));
    I.concepts[{"A", 0}] = {D("0.6"), D("0.1")};
    CHECK_FALSE(satisfies_axiom(I, sp));
  }

  TEST_CASE("grids") {
    auto g = DegreeGrid::of({D("0.5"), D("0.5"), D("0.2")});
    CHECK(g.values == std::vector<Degree>{D("0"), D("0.2"), D("0.5"), D("1")});
    CHECK(g.with_midpoints().values.size() == 7);
    CHECK(g.symmetric().contains(D("0.8")));
    CHECK(DegreeGrid::uniform(4).values == quarters());
  }

  TEST_CASE("grid closure: evaluation never leaves the grid") {
    Rng rng(2);
    Vocabulary v;
    auto grid = DegreeGrid::uniform(4);
    for (int i = 0; i < 200; ++i) {
      auto I = random_interpretation(rng, v, 3, grid.values);
      Concept c = random_concept(rng, v, 3, 8);
      for (std::size_t d = 0; d < 3; ++d) {
        auto p = eval_concept(I, c, d);
        CHECK(grid.contains(p.n));
        CHECK(grid.contains(p.m));
      }
    }
  }

  TEST_CASE("exists_model examples") {
    auto g = DegreeGrid::of({D("0.5")});
    auto m = exists_model({C("A(a) >= 0.5 <= 0.5")}, 1, g);
    REQUIRE(m);
    CHECK(satisfies(*m, C("A(a) >= 0.5 <= 0.5")));
    CHECK_FALSE(exists_model({C("bot(a) >= 0.1 <= 1")}, 1, DegreeGrid::of({D("0.1")})));

    std::vector<NeutrosophicConstraint> derivation{
        C("(some Support (and War war_x*))(p1) >= 0.6 <= 0.5"),
        C("(some Support (and War war_y*))(p2) >= 0.8 <= 0.1"),
        NeutrosophicConstraint::make(parse_assertion("(some Support War)(p1)"), NeutrosophicConstraint::Form::LtGt,
                                     D("0.6"), D("0.5"))};
    auto grid = DegreeGrid::of({D("0"), D("0.1"), D("0.5"), D("0.6"), D("0.8"), D("1")});
    CHECK_FALSE(exists_model(derivation, 3, grid));
    derivation.pop_back();
    auto model = exists_model(derivation, 3, grid);
    REQUIRE(model);
    for (const auto& c : derivation) CHECK(satisfies(*model, c));
  }

  TEST_CASE("oracle_entails examples") {
    KnowledgeBase war = parse_kb(
        "assert (some Support war_x)(p1) >= 0.6 <= 0.5\nassert (some Support war_y)(p2) >= 0.8 <= 0.1\n"
        "spec war_x < War\nspec war_y < War\n");
    CHECK(oracle_entails(war, Q("(some Support War)(p1) >= 0.6 <= 0.5")));
    CHECK(oracle_entails(expand(war), Q("(some Support War)(p1) >= 0.6 <= 0.5")));
    CHECK(oracle_entails(KnowledgeBase{}, Q("top(a) >= 1 <= 0")));
    CHECK_FALSE(oracle_entails(KnowledgeBase{}, Q("A(a) >= 0.5 <= 0.5")));
  }

  TEST_CASE("default parameters") {
    KnowledgeBase kb = parse_kb("assert (some R (all S A))(a) >= 0.5 <= 0.5\nassert B(b) >= 0.2 <= 1\n");
    auto p = default_oracle_parameters(kb, Q("C(c) >= 0.7 <= 0.3"));
    CHECK(p.domain_size == 3 + 2);
    for (const char* d : {"0", "0.2", "0.3", "0.5", "0.7", "1"}) CHECK(p.grid.contains(D(d)));
  }

  TEST_CASE("resource limit") {
    // needs a decision on A or B, i.e. more than one search node
    std::vector<NeutrosophicConstraint> cs{C("(or A B)(a) >= 0.5 <= 1"), C("(or B C)(a) >= 0.5 <= 1")};
    CHECK(exists_model(cs, 1, DegreeGrid::uniform(10)));
    OracleLimits tiny{1};
    CHECK_THROWS_AS(exists_model(cs, 1, DegreeGrid::uniform(10), tiny), ResourceLimit);
  }

  TEST_CASE("propagating search agrees with literal enumeration") {
    Rng rng(23);
    Vocabulary v;
    v.atoms = {"A"};
    v.roles = {"R"};
    v.individuals = {"a", "b"};
    const std::vector<Degree> grid{D("0"), D("0.5"), D("1")};
    int checked = 0, sat = 0;
    for (int i = 0; i < 400 && checked < 150; ++i) {
      std::vector<NeutrosophicConstraint> cs;
      const int k = 1 + pick(rng, 3);
      for (int j = 0; j < k; ++j) {
        auto a = random_assertion(rng, v, 1, 0.3);
        a.bounds = {pick(rng, grid), pick(rng, grid)};
        auto c = NeutrosophicConstraint::from(a);
        c.truth.strict = coin(rng, 0.3);
        c.falsity.strict = coin(rng, 0.3);
        cs.push_back(c);
      }
      const int n = 2;
      if (naive_space(cs, n, grid.size()) > 2e6) continue;
      ++checked;
      auto fast = exists_model(cs, n, DegreeGrid::of(grid));
      auto slow = naive_exists_model(cs, n, grid);
      CAPTURE(i);
      CHECK(fast.has_value() == slow.has_value());
      sat += fast.has_value();
      if (fast)
        for (const auto& c : cs) CHECK(satisfies(*fast, c));
    }
    CHECK(checked >= 100);
    CHECK(sat > 0);
    CHECK(sat < checked);
  }

  TEST_CASE("fuzzy semantics") {
    FuzzyInterpretation I;
    I.domain = {"d0", "d1"};
    I.individuals = {{"a", 0}};
    I.concepts[{"A", 1}] = D("0.7");
    I.roles[{"R", 0, 1}] = D("0.4");
    CHECK(eval_fuzzy(I, parse_concept("(not A)"), 1) == D("0.3"));
    CHECK(eval_fuzzy(I, parse_concept("(some R A)"), 0) == D("0.4"));
    CHECK(eval_fuzzy(I, parse_concept("(all R A)"), 0) == D("0.7"));
    FuzzyKnowledgeBase f{{{parse_assertion("A(a)"), FuzzyAssertion::Relation::Geq, D("0.6")}}, {}};
    CHECK(fuzzy_entails(f, {parse_assertion("A(a)"), FuzzyAssertion::Relation::Geq, D("0.5")}));
    CHECK_FALSE(fuzzy_entails(f, {parse_assertion("A(a)"), FuzzyAssertion::Relation::Geq, D("0.7")}));
    CHECK(fuzzy_entails(f, {parse_assertion("(not A)(a)"), FuzzyAssertion::Relation::Leq, D("0.4")}));
    CHECK(fuzzy_satisfiable(f, 1, DegreeGrid::of({D("0.6")})));
  }
}
