#pragma once

#include "nalc/assertion.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace nalc {

struct TerminologicalAxiom {
  enum class Kind : std::uint8_t { Specialization, Definition };  // A ≺ C, A :≈ C
  std::string lhs;
  Kind kind = Kind::Definition;
  Concept rhs;

  friend bool operator==(const TerminologicalAxiom& a, const TerminologicalAxiom& b) {
    return a.lhs == b.lhs && a.kind == b.kind && a.rhs == b.rhs;
  }
};

struct KnowledgeBase {
  std::vector<NeutrosophicAssertion> assertions;
  std::vector<TerminologicalAxiom> terminology;

  bool purely_assertional() const { return terminology.empty(); }
};

struct Violation {
  enum class Kind : std::uint8_t { DuplicateLhs, Cycle, DegreeRange, StarCollision, NotIndividual };
  Kind kind;
  std::string message;
  std::vector<std::string> names;  // offending concept names; the cycle in order for Kind::Cycle
};

std::vector<Violation> validate(const KnowledgeBase& kb);

class InvalidKnowledgeBase : public std::runtime_error {
 public:
  explicit InvalidKnowledgeBase(std::vector<Violation> v);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Unfolds the terminology into Σ_A. Throws InvalidKnowledgeBase.
KnowledgeBase expand(const KnowledgeBase& kb);
// Unfolds one concept with the (validated) terminology of kb.
Concept unfold(const KnowledgeBase& kb, const Concept& c);
// Star names are lhs + "*".
std::string starred(const std::string& name);

// Degrees mentioned in the assertions (not the query), plus nothing else.
std::vector<Degree> mentioned_degrees(const KnowledgeBase& kb);

// ---- fuzzy side ----------------------------------------------------------

struct FuzzyAssertion {
  enum class Relation : std::uint8_t { Geq, Leq };
  Assertion assertion;
  Relation relation = Relation::Geq;
  Degree degree;

  friend bool operator==(const FuzzyAssertion& a, const FuzzyAssertion& b) {
    return a.assertion == b.assertion && a.relation == b.relation && a.degree == b.degree;
  }
};

struct FuzzyKnowledgeBase {
  std::vector<FuzzyAssertion> assertions;
  std::vector<TerminologicalAxiom> terminology;

  friend bool operator==(const FuzzyKnowledgeBase&, const FuzzyKnowledgeBase&) = default;
};

std::string format_fuzzy(const FuzzyAssertion& a);

NeutrosophicAssertion embed_fuzzy(const FuzzyAssertion& a);
KnowledgeBase embed_fuzzy(const FuzzyKnowledgeBase& fkb);

// Projections; vacuous results (α ≥ 0, α ≤ 1) are dropped from KBs.
FuzzyAssertion sharp(const NeutrosophicAssertion& a);
FuzzyAssertion star(const NeutrosophicAssertion& a);
FuzzyKnowledgeBase sharp(const KnowledgeBase& kb);
FuzzyKnowledgeBase star(const KnowledgeBase& kb);
bool vacuous(const FuzzyAssertion& a);

}  // namespace nalc
