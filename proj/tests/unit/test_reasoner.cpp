#include "doctest.h"
#include "nalc/oracle.hpp"
#include "nalc/parser.hpp"
#include "nalc/reasoner.hpp"
#include "support/random.hpp"

using namespace nalc;
using namespace nalc::testing;

namespace {
Degree D(const char* s) { return *Degree::parse(s); }
NeutrosophicAssertion Q(const char* s) { return parse_query(s); }
Concept P(const char* s) { return parse_concept(s); }
DegreePair pair(const char* n, const char* m) { return {D(n), D(m)}; }

const char* kWarSupport =
    "assert (some Support war_x)(p1) >= 0.6 <= 0.5\n"
    "assert (some Support war_y)(p2) >= 0.8 <= 0.1\n"
    "spec war_x < War\nspec war_y < War\n";
}  // namespace

TEST_SUITE("reasoner") {
  TEST_CASE("entailment examples") {
    KnowledgeBase war = parse_kb(kWarSupport);
    CHECK(entails(war, Q("(some Support War)(p1) >= 0.6 <= 0.5")));
    CHECK(entails(war, Q("(some Support War)(p2) >= 0.8 <= 0.1")));
    CHECK(entails(expand(war), Q("(some Support War)(p1) >= 0.6 <= 0.5")));
    CHECK_FALSE(entails(war, Q("(some Support War)(p1) >= 0.7 <= 0.5")));
    CHECK_FALSE(entails(war, Q("(some Support war_x)(p2) >= 0.1 <= 1")));

    KnowledgeBase roles = parse_kb("assert (all R A)(a) >= 1 <= 0\nassert A(b) <= 0 >= 1\n");
    CHECK(entails(roles, Q("R(a,b) <= 0 >= 1")));

    KnowledgeBase mp = parse_kb("assert C(a) >= 0.8 <= 0.2\nassert (or (not C) D)(a) >= 0.6 <= 0.3\n");
    CHECK(entails(mp, Q("D(a) >= 0.6 <= 0.3")));
    CHECK(oracle_entails(mp, Q("D(a) >= 0.6 <= 0.3"), 1,
                         DegreeGrid::of({D("0.2"), D("0.3"), D("0.6"), D("0.8")}).with_midpoints()));
  }

  TEST_CASE("proof objects") {
    Reasoner r(parse_kb(kWarSupport));
    auto proof = r.explain(Q("(some Support War)(p1) >= 0.6 <= 0.5"));
    CHECK(proof.answer);
    REQUIRE(proof.refutations.size() == 2);
    for (const auto& ref : proof.refutations) CHECK_FALSE(ref.result.satisfiable());
    auto open = r.explain(Q("(some Support War)(p1) >= 0.7 <= 0.5"));
    CHECK_FALSE(open.answer);
    CHECK(open.refutations.back().result.satisfiable());
  }

  TEST_CASE("out-of-range queries are rejected") {
    Reasoner r(KnowledgeBase{});
    NeutrosophicAssertion q = Q("A(a) >= 0.5 <= 0.5");
    q.bounds.n = Degree(3, 2);
    CHECK_THROWS_AS(r.entails(q), std::invalid_argument);
  }

  TEST_CASE("subsumption examples") {
    KnowledgeBase none;
    CHECK(subsumes(none, P("C"), P("C")));
    CHECK(subsumes(none, P("(and A B)"), P("A")));
    CHECK(subsumes(none, P("A"), P("(or A B)")));
    CHECK_FALSE(subsumes(none, P("(or A B)"), P("A")));
    CHECK(subsumes(none, P("(all R (and A B))"), P("(and (all R A) (all R B))")));
    CHECK_FALSE(subsumes(none, P("top"), P("(or A (not A))")));
    KnowledgeBase t = parse_kb("spec A < B\ndefine C = (and A D)\n");
    CHECK(subsumes(t, P("A"), P("B")));
    CHECK(subsumes(t, P("C"), P("B")));
    CHECK_FALSE(subsumes(t, P("B"), P("A")));
    // a denser grid agrees on these
    std::vector<Degree> dense;
    for (int i = 0; i <= 10; ++i) dense.emplace_back(i, 10);
    CHECK(subsumes(t, P("C"), P("B"), dense));
    CHECK_FALSE(subsumes(none, P("(or A B)"), P("A"), dense));
  }

  TEST_CASE("glb/lub examples") {
    auto g = glb(parse_kb("assert R(a,b) >= 0.6 <= 0.3\nassert R(a,b) >= 0.7 <= 0.4\n"), parse_assertion("R(a,b)"));
    CHECK(g.bound == pair("0.7", "0.3"));
    CHECK(g.kind == BtvbResult::Kind::Glb);
    CHECK(glb(KnowledgeBase{}, parse_assertion("C(a)")).bound == pair("0", "1"));
    CHECK(glb(parse_kb("assert (and A B)(a) >= 0.6 <= 0.2\n"), parse_assertion("A(a)")).bound == pair("0.6", "0.2"));
    CHECK(lub(parse_kb("assert C(a) <= 0.4 >= 0.7\n"), parse_assertion("C(a)")).bound == pair("0.4", "0.7"));
    CHECK(lub(KnowledgeBase{}, parse_assertion("C(a)")).bound == pair("1", "0"));
    CHECK_THROWS_AS(lub(KnowledgeBase{}, parse_assertion("R(a,b)")), UnsupportedQuery);
    Reasoner r(parse_kb("assert (all R A)(a) >= 1 <= 0\nassert A(b) <= 0 >= 1\n"));
    CHECK(r.lub_direct(parse_assertion("R(a,b)")).bound == pair("0", "1"));
    CHECK(r.candidates().front() == D("0"));
    CHECK(r.candidates().back() == D("1"));
  }

  TEST_CASE("glb is entailed and maximal; routes agree") {
    Rng rng(41);
    Vocabulary v;
    v.individuals = {"a", "b"};
    for (int i = 0; i < 60; ++i) {
      KnowledgeBase kb = random_kb(rng, v, 3, 2);
      Reasoner r(kb);
      if (!r.satisfiable()) continue;
      Assertion a = random_assertion(rng, v, 1, 0).assertion;
      auto g = r.glb(a).bound;
      CHECK(r.entails({a, NeutrosophicAssertion::Sign::GeqLeq, g}));
      for (const auto& c : r.candidates()) {
        if (c > g.n) CHECK_FALSE(r.entails({a, NeutrosophicAssertion::Sign::GeqLeq, {c, Degree::one()}}));
        if (c < g.m) CHECK_FALSE(r.entails({a, NeutrosophicAssertion::Sign::GeqLeq, {Degree::zero(), c}}));
      }
      CHECK(r.lub(a).bound == r.lub_direct(a).bound);
    }
  }

  TEST_CASE("monotone in the KB and negation duality") {
    Rng rng(43);
    Vocabulary v;
    v.individuals = {"a", "b"};
    for (int i = 0; i < 80; ++i) {
      KnowledgeBase small = random_kb(rng, v, 2, 2);
      KnowledgeBase big = small;
      big.assertions.push_back(random_assertion(rng, v, 2));
      auto q = random_assertion(rng, v, 2, 0);
      if (entails(small, q)) CHECK(entails(big, q));
      auto upper = q;
      upper.sign = NeutrosophicAssertion::Sign::LeqGeq;
      NeutrosophicAssertion neg{Assertion::of_concept(Concept::negation(q.assertion.expr), q.assertion.subject),
                                NeutrosophicAssertion::Sign::GeqLeq, {upper.bounds.m, upper.bounds.n}};
      CHECK(entails(big, upper) == entails(big, neg));
    }
  }
}
