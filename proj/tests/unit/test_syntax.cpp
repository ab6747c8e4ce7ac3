#include "doctest.h"
#include "nalc/oracle.hpp"
#include "nalc/parser.hpp"
#include "support/random.hpp"

using namespace nalc;
using namespace nalc::testing;

namespace {
Concept P(const char* s) { return parse_concept(s); }

bool negations_on_atoms(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Not: return c.inner().is_atomic();
    case ConceptKind::And:
    case ConceptKind::Or: return negations_on_atoms(c.left()) && negations_on_atoms(c.right());
    case ConceptKind::Forall:
    case ConceptKind::Exists: return negations_on_atoms(c.filler());
    default: return true;
  }
}
}  // namespace

TEST_SUITE("syntax") {
  TEST_CASE("nnf rewrites") {
    CHECK(nnf(P("(not (and C D))")) == P("(or (not C) (not D))"));
    CHECK(nnf(P("(not (not A))")) == P("A"));
    CHECK(nnf(P("A")) == P("A"));
    CHECK(nnf(P("(not (all R (and A (not B))))")) == P("(some R (or (not A) B))"));
    CHECK(nnf(P("(not top)")) == P("bot"));
    CHECK(nnf(P("(not bot)")) == P("top"));
    CHECK(nnf(P("(not (or A B))")) == P("(and (not A) (not B))"));
    CHECK(nnf(P("(not (some R A))")) == P("(all R (not A))"));
  }

  TEST_CASE("nnf on random concepts: shape, idempotence, semantics") {
    Rng rng(11);
    Vocabulary v;
    for (int i = 0; i < 300; ++i) {
      Concept c = random_concept(rng, v, 3, 8);
      Concept n = nnf(c);
      CHECK(negations_on_atoms(n));
      CHECK(nnf(n) == n);
      for (int k = 0; k < 5; ++k) {
        auto I = random_interpretation(rng, v, 1 + pick(rng, 3), quarters());
        for (std::size_t d = 0; d < I.domain.size(); ++d) CHECK(eval_concept(I, c, d) == eval_concept(I, n, d));
      }
    }
  }

  TEST_CASE("the worked nnf example agrees on 100 interpretations") {
    Rng rng(5);
    Vocabulary v;
    const Concept lhs = P("(not (all R (and A (not B))))"), rhs = P("(some R (or (not A) B))");
    for (int i = 0; i < 100; ++i) {
      auto I = random_interpretation(rng, v, 1 + pick(rng, 3), quarters());
      for (std::size_t d = 0; d < I.domain.size(); ++d) CHECK(eval_concept(I, lhs, d) == eval_concept(I, rhs, d));
    }
  }

  TEST_CASE("subconcepts") {
    CHECK(subconcepts(P("A")) == std::set<Concept>{P("A")});
    CHECK(subconcepts(P("(and A B)")) == std::set<Concept>{P("(and A B)"), P("A"), P("B")});
    CHECK(subconcepts(P("(some R (or A B))")) ==
          std::set<Concept>{P("(some R (or A B))"), P("(or A B)"), P("A"), P("B")});
  }

  TEST_CASE("structure helpers") {
    Concept c = P("(and (some R (all S A)) (not B))");
    CHECK(quantifier_depth(c) == 2);
    CHECK(concept_size(c) == 6);
    CHECK(atomic_names(c) == std::set<std::string>{"A", "B"});
    CHECK(role_names(c) == std::set<std::string>{"R", "S"});
    CHECK(Concept::conj(P("A"), P("B")) == P("(and A B)"));  // hash-consing
    CHECK_THROWS_AS(P("A").left(), std::logic_error);
  }

  TEST_CASE("duality and excluded middle") {
    Rng rng(7);
    Vocabulary v;
    const Concept all = P("(all R A)"), dual = P("(not (some R (not A)))"), lem = P("(or A (not A))");
    bool lem_fails = false;
    for (int i = 0; i < 200; ++i) {
      auto I = random_interpretation(rng, v, 2, quarters());
      for (std::size_t d = 0; d < 2; ++d) {
        CHECK(eval_concept(I, all, d) == eval_concept(I, dual, d));
        lem_fails = lem_fails || eval_concept(I, lem, d).n < Degree::one();
      }
    }
    CHECK(lem_fails);
  }
}
