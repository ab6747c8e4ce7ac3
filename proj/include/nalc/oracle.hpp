#pragma once

#include "nalc/constraint.hpp"
#include "nalc/kb.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace nalc {

using VariableAssignment = std::map<std::string, std::size_t>;  // variable name -> element

class OracleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Search budget exceeded; `count` is the number of search nodes visited.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::uint64_t count) : std::runtime_error(what), count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

struct FiniteInterpretation {
  std::vector<std::string> domain;                // element labels; elements are indices
  std::map<std::string, std::size_t> individuals;  // injective
  std::map<std::pair<std::string, std::size_t>, DegreePair> concepts;
  std::map<std::tuple<std::string, std::size_t, std::size_t>, DegreePair> roles;

  DegreePair concept_value(const std::string& a, std::size_t d) const;  // default ⟨0,1⟩
  DegreePair role_value(const std::string& r, std::size_t d, std::size_t e) const;
  std::size_t element_of(const Object& o, const VariableAssignment& vars = {}) const;
  bool injective() const;
};

std::string format_interpretation(const FiniteInterpretation& I);

DegreePair eval_concept(const FiniteInterpretation& I, const Concept& c, std::size_t d);
DegreePair eval_assertion(const FiniteInterpretation& I, const Assertion& a, const VariableAssignment& vars = {});

bool satisfies(const FiniteInterpretation& I, const NeutrosophicAssertion& a, const VariableAssignment& vars = {});
bool satisfies(const FiniteInterpretation& I, const NeutrosophicConstraint& c, const VariableAssignment& vars = {});
bool satisfies_axiom(const FiniteInterpretation& I, const TerminologicalAxiom& ax);
bool satisfies(const FiniteInterpretation& I, const KnowledgeBase& kb);

struct DegreeGrid {
  std::vector<Degree> values;  // ascending, deduplicated, contains 0 and 1

  static DegreeGrid of(std::vector<Degree> degrees);
  // {0, 1/k, …, 1}
  static DegreeGrid uniform(int k);
  // adds the midpoint of every pair of neighbours
  DegreeGrid with_midpoints() const;
  // closes under v ↦ 1 − v
  DegreeGrid symmetric() const;
  bool contains(const Degree& d) const;
};

struct OracleLimits {
  std::uint64_t max_search_nodes = 20'000'000;
};

// Bounded model search: tables range over the grid, individuals go
// injectively to the first elements, variables range over the whole domain.
// Exhaustive (a propagating backtracking search, not literal enumeration).
std::optional<FiniteInterpretation> exists_model(const std::vector<NeutrosophicConstraint>& constraints,
                                                 const std::vector<TerminologicalAxiom>& terminology,
                                                 int domain_size, const DegreeGrid& grid,
                                                 const OracleLimits& limits = {},
                                                 VariableAssignment* assignment = nullptr);

inline std::optional<FiniteInterpretation> exists_model(const std::vector<NeutrosophicConstraint>& constraints,
                                                        int domain_size, const DegreeGrid& grid,
                                                        const OracleLimits& limits = {}) {
  return exists_model(constraints, {}, domain_size, grid, limits);
}

struct OracleParameters {
  int domain_size = 1;
  DegreeGrid grid;
};

// domain = objects + max quantifier depth; grid = mentioned degrees ∪ {0,1},
// plus midpoints (the refutation constraints are strict).
OracleParameters default_oracle_parameters(const KnowledgeBase& kb, const NeutrosophicAssertion& query);

// Component-wise refutation: both ⟨α: <n, ≥0⟩ and ⟨α: ≤1, >m⟩ (dually for
// upper queries) must be unsatisfiable together with Σ.
bool oracle_entails(const KnowledgeBase& kb, const NeutrosophicAssertion& query, int domain_size,
                    const DegreeGrid& grid, const OracleLimits& limits = {});
bool oracle_entails(const KnowledgeBase& kb, const NeutrosophicAssertion& query, const OracleLimits& limits = {});
bool oracle_satisfiable(const KnowledgeBase& kb, int domain_size, const DegreeGrid& grid,
                        const OracleLimits& limits = {});

// ---- fuzzy semantics (negation 1 − x) --------------------------------------

struct FuzzyInterpretation {
  std::vector<std::string> domain;
  std::map<std::string, std::size_t> individuals;
  std::map<std::pair<std::string, std::size_t>, Degree> concepts;  // default 0
  std::map<std::tuple<std::string, std::size_t, std::size_t>, Degree> roles;
};

Degree eval_fuzzy(const FuzzyInterpretation& I, const Concept& c, std::size_t d);
bool satisfies(const FuzzyInterpretation& I, const FuzzyAssertion& a);
bool satisfies_axiom(const FuzzyInterpretation& I, const TerminologicalAxiom& ax);

// Grid is made symmetric (and midpoint-closed) internally.
bool fuzzy_satisfiable(const FuzzyKnowledgeBase& fkb, int domain_size, const DegreeGrid& grid,
                       const OracleLimits& limits = {});
bool fuzzy_entails(const FuzzyKnowledgeBase& fkb, const FuzzyAssertion& query, int domain_size,
                   const DegreeGrid& grid, const OracleLimits& limits = {});
bool fuzzy_entails(const FuzzyKnowledgeBase& fkb, const FuzzyAssertion& query, const OracleLimits& limits = {});

}  // namespace nalc
