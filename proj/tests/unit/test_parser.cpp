#include "doctest.h"
#include "nalc/parser.hpp"
#include "support/random.hpp"

using namespace nalc;
using namespace nalc::testing;

namespace {
const char* kWarSupport =
    "# polls\n"
    "assert (some Support war_x)(p1) >= 0.6 <= 0.5\n"
    "assert (some Support war_y)(p2) >= 0.8 <= 0.1\n"
    "spec war_x < War\n"
    "spec war_y < War\n";

std::vector<ParseError> errors_of(std::string_view text) {
  try {
    parse_kb(text);
  } catch (const ParseFailure& e) {
    return e.errors();
  }
  return {};
}
}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("concepts") {
    CHECK(parse_concept("(and Video (some About Basket))") ==
          Concept::conj(Concept::atomic("Video"), Concept::exists("About", Concept::atomic("Basket"))));
    CHECK(parse_concept("top") == Concept::top());
    CHECK(parse_concept("bot") == Concept::bottom());
    CHECK(parse_concept("(not (all Support War))") ==
          Concept::negation(Concept::forall("Support", Concept::atomic("War"))));
    CHECK(parse_concept("  war_x*  ") == Concept::atomic("war_x*"));
  }

  TEST_CASE("format") {
    CHECK(format_concept(Concept::top()) == "top");
    CHECK(format_concept(Concept::conj(Concept::atomic("A"), Concept::atomic("B"))) == "(and A B)");
    CHECK(format_concept(Concept::exists("R", Concept::negation(Concept::atomic("A")))) == "(some R (not A))");
  }

  TEST_CASE("round trip on random concepts and KBs") {
    Rng rng(3);
    Vocabulary v;
    for (int i = 0; i < 500; ++i) {
      Concept c = random_concept(rng, v, 3, 10);
      CHECK(parse_concept(format_concept(c)) == c);
    }
    for (int i = 0; i < 100; ++i) {
      KnowledgeBase kb = random_kb(rng, v, 4, 2);
      KnowledgeBase back = parse_kb(format_kb(kb));
      REQUIRE(back.assertions.size() == kb.assertions.size());
      for (std::size_t k = 0; k < kb.assertions.size(); ++k) CHECK(back.assertions[k] == kb.assertions[k]);
    }
  }

  TEST_CASE("war-support KB file") {
    KnowledgeBase kb = parse_kb(kWarSupport);
    CHECK(kb.assertions.size() == 2);
    CHECK(kb.terminology.size() == 2);
    CHECK(kb.assertions[0].bounds.n == Degree(3, 5));
    CHECK(kb.assertions[1].bounds.m == Degree(1, 10));
    CHECK(kb.terminology[0].kind == TerminologicalAxiom::Kind::Specialization);
    CHECK(parse_kb(format_kb(kb)).terminology == kb.terminology);
  }

  TEST_CASE("empty and comment-only input") {
    CHECK(parse_kb("").assertions.empty());
    CHECK(parse_kb("# nothing\n\n   \n").terminology.empty());
  }

  TEST_CASE("degrees are exact") {
    auto q = parse_query("assert A(a) >= 0.6 <= 1/3");
    CHECK(q.bounds.n == Degree(3, 5));
    CHECK(q.bounds.m == Degree(1, 3));
    CHECK(parse_query("A(a) <= .25 >= 1").sign == NeutrosophicAssertion::Sign::LeqGeq);
    CHECK(*Degree::parse("0.1") + *Degree::parse("0.2") == *Degree::parse("0.3"));
  }

  TEST_CASE("assertions") {
    Assertion r = parse_assertion("R(a,b)");
    CHECK(r.is_role());
    CHECK(r.role == "R");
    CHECK(r.object == Object::individual("b"));
    Assertion c = parse_assertion("(some R A)(a)");
    CHECK(format_assertion(c) == "(some R A)(a)");
  }

  TEST_CASE("degree range") {
    auto e = errors_of("assert C(a) >= 1.2 <= 0");
    REQUIRE(e.size() == 1);
    CHECK(e[0].kind == ParseError::Kind::DegreeRange);
    CHECK(e[0].span.line == 1);
    CHECK(e[0].span.column == 16);
    CHECK(errors_of("assert C(a) >= -0.5 <= 0").at(0).kind == ParseError::Kind::DegreeRange);
    CHECK(errors_of("assert C(a) >= 3/2 <= 0").at(0).kind == ParseError::Kind::DegreeRange);
  }

  TEST_CASE("duplicate definitions and cycles") {
    auto dup = errors_of("spec A < B\nspec A < C\n");
    REQUIRE(dup.size() == 1);
    CHECK(dup[0].kind == ParseError::Kind::DuplicateDefinition);
    CHECK(dup[0].span.line == 2);
    CHECK(dup[0].span.column == 6);
    auto cyc = errors_of("define A = (some R B)\ndefine B = (not A)\n");
    REQUIRE(!cyc.empty());
    CHECK(cyc[0].kind == ParseError::Kind::Validation);
  }

  TEST_CASE("all errors are collected") {
    auto e = errors_of("assert (and A B(a) >= 0 <= 1\nassert A(a) >= 2 <= 0\nfoo\n");
    CHECK(e.size() == 3);
    CHECK(e[0].span.line == 1);
    CHECK(e[1].span.line == 2);
    CHECK(e[2].span.line == 3);
  }

  TEST_CASE("error spans point into the offending token") {
    struct Case {
      const char* text;
      int column;
    };
    // column of the first character of the offending token
    const Case cases[] = {
        {"assert A(a) >= 0.5 <= ", 23},        // missing degree (end of line)
        {"assert A(a) => 0.5 <= 0.5", 13},     // bad relation
        {"assert (and A)(a) >= 0 <= 1", 14},   // missing operand
        {"assert (xor A B)(a) >= 0 <= 1", 9},  // unknown connective
        {"assert A(a) >= 0.5 <= 0.5 extra", 27},
        {"assert A(a) >= 0.5.1 <= 1", 16},
        {"spec A = B", 8},
        {"assert A(a) >= 0.5 @ 0.5", 20},
        {"define and = B", 8},
    };
    for (const auto& c : cases) {
      CAPTURE(c.text);
      auto e = errors_of(c.text);
      REQUIRE(!e.empty());
      const auto& s = e[0].span;
      CHECK(s.line == 1);
      CHECK(s.column <= c.column);
      CHECK(c.column <= s.column + std::max(s.length, 1) - 1 + (s.length == 0 ? 1 : 0));
      CHECK(!e[0].message.empty());
    }
  }

  TEST_CASE("format_error") {
    auto e = errors_of("assert C(a) >= 1.2 <= 0");
    CHECK(format_error(e.at(0)).rfind("1:16: degree-range error:", 0) == 0);
  }
}
