#pragma once

#include "nalc/kb.hpp"
#include "nalc/tableau.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nalc {

struct BtvbResult {
  enum class Kind : std::uint8_t { Glb, Lub };
  DegreePair bound;
  Kind kind = Kind::Glb;
  std::uint64_t candidates_examined = 0;
};

class UnsupportedQuery : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Refutation {
  NeutrosophicConstraint hypothesis;
  CompletionResult result;
};

struct EntailmentProof {
  bool answer = false;
  // one tableau run per non-vacuous query component; stops at the first open one
  std::vector<Refutation> refutations;
};

// Expands the KB once; all queries run on the expanded assertions.
class Reasoner {
 public:
  explicit Reasoner(KnowledgeBase kb, CompletionOptions options = {});

  const KnowledgeBase& knowledge_base() const { return kb_; }
  const KnowledgeBase& expanded() const { return expanded_; }

  CompletionResult check() const;
  bool satisfiable() const { return check().satisfiable(); }

  bool entails(const NeutrosophicAssertion& query) const;
  EntailmentProof explain(const NeutrosophicAssertion& query) const;
  // One conjugate hypothesis ⟨α: <n, >m⟩ (dually ⟨α: >n, <m⟩) against Σ. Closed
  // whenever the query is entailed; an open result does not refute it.
  Refutation explain_combined(const NeutrosophicAssertion& query) const;

  // greatest entailed ⟨n, m⟩ for ⟨α: ≥n, ≤m⟩
  BtvbResult glb(const Assertion& a) const;
  // least entailed ⟨n, m⟩ for ⟨α: ≤n, ≥m⟩, through glb(¬C(a)); concept assertions only
  BtvbResult lub(const Assertion& a) const;
  // same value by a direct candidate search (also accepts role assertions)
  BtvbResult lub_direct(const Assertion& a) const;

  // degrees mentioned in Σ plus 0 and 1, ascending
  const std::vector<Degree>& candidates() const { return candidates_; }

 private:
  NeutrosophicAssertion prepare(NeutrosophicAssertion q) const;
  bool entails_prepared(const NeutrosophicAssertion& q) const;

  KnowledgeBase kb_, expanded_;
  std::vector<NeutrosophicConstraint> base_;
  std::vector<Degree> candidates_;
  CompletionOptions options_;
};

bool entails(const KnowledgeBase& kb, const NeutrosophicAssertion& query);
BtvbResult glb(const KnowledgeBase& kb, const Assertion& a);
BtvbResult lub(const KnowledgeBase& kb, const Assertion& a);

std::vector<Degree> default_subsumption_grid();  // 0, 0.25, 0.5, 0.75, 1
// C ⪯ D w.r.t. the terminology of `tbox` (its assertions are ignored).
bool subsumes(const KnowledgeBase& tbox, const Concept& c, const Concept& d,
              const std::vector<Degree>& grid = default_subsumption_grid(), const CompletionOptions& options = {});

}  // namespace nalc
