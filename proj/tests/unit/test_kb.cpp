#include "doctest.h"
#include "nalc/oracle.hpp"
#include "nalc/parser.hpp"
#include "support/random.hpp"

using namespace nalc;
using namespace nalc::testing;

namespace {
KnowledgeBase raw(std::vector<NeutrosophicAssertion> as, std::vector<TerminologicalAxiom> ts) {
  return {std::move(as), std::move(ts)};
}
TerminologicalAxiom spec(const char* a, const char* c) {
  return {a, TerminologicalAxiom::Kind::Specialization, parse_concept(c)};
}
TerminologicalAxiom def(const char* a, const char* c) { return {a, TerminologicalAxiom::Kind::Definition, parse_concept(c)}; }
NeutrosophicAssertion Q(const char* s) { return parse_query(s); }
// the query goes through the same unfolding as the KB
NeutrosophicAssertion unfolded(const KnowledgeBase& kb, NeutrosophicAssertion q) {
  q.assertion.expr = unfold(kb, q.assertion.expr);
  return q;
}
FuzzyAssertion geq(const char* a, Degree d) { return {parse_assertion(a), FuzzyAssertion::Relation::Geq, d}; }
FuzzyAssertion leq(const char* a, Degree d) { return {parse_assertion(a), FuzzyAssertion::Relation::Leq, d}; }
}  // namespace

TEST_SUITE("kb") {
  TEST_CASE("validate") {
    KnowledgeBase war = raw({Q("(some Support war_x)(p1) >= 0.6 <= 0.5")}, {spec("war_x", "War"), spec("war_y", "War")});
    CHECK(validate(war).empty());

    auto cyc = validate(raw({}, {def("A", "(some R B)"), def("B", "(not A)")}));
    REQUIRE(cyc.size() == 1);
    CHECK(cyc[0].kind == Violation::Kind::Cycle);
    CHECK(cyc[0].names == std::vector<std::string>{"A", "B"});

    auto dup = validate(raw({}, {spec("A", "B"), spec("A", "C")}));
    REQUIRE(dup.size() == 1);
    CHECK(dup[0].kind == Violation::Kind::DuplicateLhs);
    CHECK(dup[0].names == std::vector<std::string>{"A"});

    auto range = validate(raw({{parse_assertion("A(a)"), NeutrosophicAssertion::Sign::GeqLeq, {Degree(6, 5), Degree(0)}}}, {}));
    REQUIRE(range.size() == 1);
    CHECK(range[0].kind == Violation::Kind::DegreeRange);

    auto star = validate(raw({Q("A*(a) >= 0 <= 1")}, {spec("A", "B")}));
    REQUIRE(star.size() == 1);
    CHECK(star[0].kind == Violation::Kind::StarCollision);

    auto self = validate(raw({}, {def("A", "(and A B)")}));
    REQUIRE(self.size() == 1);
    CHECK(self[0].kind == Violation::Kind::Cycle);
  }

  TEST_CASE("expand the war-support KB") {
    KnowledgeBase kb = parse_kb(
        "assert (some Support war_x)(p1) >= 0.6 <= 0.5\n"
        "assert (some Support war_y)(p2) >= 0.8 <= 0.1\n"
        "spec war_x < War\nspec war_y < War\n");
    KnowledgeBase e = expand(kb);
    CHECK(e.purely_assertional());
    REQUIRE(e.assertions.size() == 2);
    CHECK(e.assertions[0] == Q("(some Support (and War war_x*))(p1) >= 0.6 <= 0.5"));
    CHECK(e.assertions[1] == Q("(some Support (and War war_y*))(p2) >= 0.8 <= 0.1"));
  }

  TEST_CASE("expand: identity, definitions, chains") {
    KnowledgeBase pure = parse_kb("assert A(a) >= 0.5 <= 0.5\nassert R(a,b) >= 1 <= 0\n");
    CHECK(expand(pure).assertions == pure.assertions);

    KnowledgeBase d = parse_kb("assert A(a) >= 0.5 <= 0.5\ndefine A = (and B C)\n");
    CHECK(expand(d).assertions == std::vector{Q("(and B C)(a) >= 0.5 <= 0.5")});

    KnowledgeBase chain = parse_kb("assert A(a) >= 1 <= 0\ndefine A = (some R B)\nspec B < (or C D)\ndefine D = E\n");
    CHECK(expand(chain).assertions == std::vector{Q("(some R (and (or C E) B*))(a) >= 1 <= 0")});
    CHECK(unfold(chain, parse_concept("(not A)")) == parse_concept("(not (some R (and (or C E) B*)))"));
    CHECK_THROWS_AS(expand(raw({}, {def("A", "A")})), InvalidKnowledgeBase);
  }

  TEST_CASE("expansion preserves entailment (oracle)") {
    KnowledgeBase d = parse_kb("assert A(a) >= 0.5 <= 0.5\ndefine A = (and B C)\n");
    KnowledgeBase e = expand(d);
    const auto grid = DegreeGrid::of({Degree(1, 4), Degree(1, 2), Degree(3, 4)});
    for (const char* q : {"B(a) >= 0.5 <= 0.5", "C(a) >= 0.5 <= 0.75", "(and B C)(a) >= 0.5 <= 0.5",
                          "A(a) >= 0.5 <= 0.5", "B(a) >= 0.75 <= 0.5", "(or B C)(a) <= 0.5 >= 0.5"}) {
      CAPTURE(q);
      CHECK(oracle_entails(d, Q(q), 1, grid.with_midpoints()) ==
            oracle_entails(e, unfolded(d, Q(q)), 1, grid.with_midpoints()));
    }
    // with specializations the fresh star concept only adds freedom
    KnowledgeBase s = parse_kb("assert A(a) >= 0.75 <= 0.25\nspec A < B\n");
    for (const char* q : {"B(a) >= 0.75 <= 0.25", "B(a) >= 1 <= 0.25", "A(a) >= 0.75 <= 0.25"}) {
      CAPTURE(q);
      CHECK(oracle_entails(s, Q(q), 1, grid.with_midpoints()) ==
            oracle_entails(expand(s), unfolded(s, Q(q)), 1, grid.with_midpoints()));
    }
  }

  TEST_CASE("mentioned degrees") {
    KnowledgeBase kb = parse_kb("assert A(a) >= 0.6 <= 0.5\nassert R(a,b) <= 1/3 >= 0.6\n");
    CHECK(mentioned_degrees(kb) == std::vector<Degree>{Degree(1, 3), Degree(1, 2), Degree(3, 5)});
  }

  TEST_CASE("fuzzy embedding") {
    CHECK(embed_fuzzy(geq("C(a)", Degree(7, 10))) == Q("C(a) >= 0.7 <= 0.3"));
    CHECK(embed_fuzzy(leq("C(a)", Degree(2, 5))) == Q("C(a) <= 0.4 >= 0.6"));
    CHECK(embed_fuzzy(geq("C(a)", Degree(1))) == Q("C(a) >= 1 <= 0"));
    FuzzyKnowledgeBase f{{geq("R(a,b)", Degree(1, 2))}, {spec("A", "B")}};
    KnowledgeBase k = embed_fuzzy(f);
    CHECK(k.terminology == f.terminology);
    CHECK(k.assertions == std::vector{Q("R(a,b) >= 0.5 <= 0.5")});
  }

  TEST_CASE("projections") {
    CHECK(sharp(Q("C(a) >= 0.6 <= 0.5")) == geq("C(a)", Degree(3, 5)));
    CHECK(star(Q("C(a) >= 0.6 <= 0.5")) == leq("C(a)", Degree(1, 2)));
    CHECK(sharp(Q("C(a) <= 0.6 >= 0.5")) == leq("C(a)", Degree(3, 5)));
    CHECK(star(Q("C(a) <= 0.6 >= 0.5")) == geq("C(a)", Degree(1, 2)));
    CHECK(sharp(KnowledgeBase{}).assertions.empty());
    CHECK(vacuous(geq("C(a)", Degree(0))));
    CHECK(vacuous(leq("C(a)", Degree(1))));
    KnowledgeBase kb = parse_kb("assert C(a) >= 0 <= 0.5\nspec A < B\n");
    CHECK(sharp(kb).assertions.empty());
    CHECK(star(kb).assertions.size() == 1);
    CHECK(star(kb).terminology == kb.terminology);
    CHECK(format_fuzzy(geq("C(a)", Degree(3, 5))) == "C(a) >= 0.6");
  }

  TEST_CASE("sharp undoes the embedding") {
    Rng rng(17);
    Vocabulary v;
    for (int i = 0; i < 100; ++i) {
      FuzzyKnowledgeBase f;
      const int k = 1 + pick(rng, 4);
      for (int j = 0; j < k; ++j) {
        FuzzyAssertion a{random_assertion(rng, v, 2).assertion,
                         coin(rng) ? FuzzyAssertion::Relation::Geq : FuzzyAssertion::Relation::Leq,
                         Degree(1 + pick(rng, 9), 10)};
        f.assertions.push_back(a);
      }
      CHECK(sharp(embed_fuzzy(f)) == f);
    }
  }
}
