#pragma once

#include "nalc/constraint.hpp"
#include "nalc/oracle.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nalc {

struct TraceStep {
  std::string rule;                  // "hypothesis", "(∃_{≥,≤})", ...
  std::vector<std::size_t> premises;  // 0-based constraint indices
  std::vector<std::size_t> conclusions;
};

class ConstraintSet {
 public:
  ConstraintSet() = default;
  explicit ConstraintSet(const std::vector<NeutrosophicConstraint>& hypotheses);

  // Appends unless an identical constraint is present; returns its index or nullopt.
  std::optional<std::size_t> add(const NeutrosophicConstraint& c);
  void add_hypothesis(const NeutrosophicConstraint& c, const std::string& label = "hypothesis");
  void record(std::string rule, std::vector<std::size_t> premises, std::vector<std::size_t> conclusions);

  const std::vector<NeutrosophicConstraint>& constraints() const { return items_; }
  const NeutrosophicConstraint& operator[](std::size_t i) const { return items_[i]; }
  std::size_t size() const { return items_.size(); }
  const std::vector<TraceStep>& trace() const { return trace_; }

  // indices of constraints on α
  const std::vector<std::size_t>& on(const Assertion& a) const;
  // indices of lower-form constraints R(ω, ·)
  const std::vector<std::size_t>& edges_from(const std::string& role, const Object& subject) const;

  // Each non-vacuous component of c follows from some constraint on the same assertion.
  bool implies(const NeutrosophicConstraint& c) const;

  Object fresh_variable();
  int fresh_counter() const { return fresh_; }
  void set_fresh_counter(int n) { fresh_ = n; }

  std::vector<Object> objects() const;

 private:
  std::vector<NeutrosophicConstraint> items_;
  std::set<NeutrosophicConstraint> present_;
  std::map<Assertion, std::vector<std::size_t>> by_assertion_;
  std::map<std::pair<std::string, Object>, std::vector<std::size_t>> edges_;
  std::vector<TraceStep> trace_;
  int fresh_ = 0;
};

struct Clash {
  std::string reason;                 // "bottom", "top", "out of range", "conjugated pair"
  std::vector<std::size_t> constraints;  // 0-based indices
};

std::string describe(const Clash& clash, const ConstraintSet& s);

// Unsatisfiable on its own (⊥/⊤ bounds, strict bounds beyond [0,1]).
bool self_clash(const NeutrosophicConstraint& c);
// Lower- vs upper-form constraints on one assertion with no common value.
// Throws std::invalid_argument when the assertions differ.
bool conjugated(const NeutrosophicConstraint& a, const NeutrosophicConstraint& b);
std::optional<Clash> find_clash(const ConstraintSet& s);

struct RuleApplication {
  std::string rule;
  std::vector<std::size_t> premises;
  // alternatives; a single entry for deterministic rules
  std::vector<std::vector<NeutrosophicConstraint>> branches;
  bool generating = false;
};

// The rule the completion strategy would fire next, or nullopt at a fixpoint.
// Fresh variables are drawn from s's counter (hence non-const).
std::optional<RuleApplication> next_rule(ConstraintSet& s);
// One rule application: the resulting branches, or nullopt at a fixpoint.
std::optional<std::vector<ConstraintSet>> apply_rules(const ConstraintSet& s);

struct TableauLimits {
  std::uint64_t max_branches = 1'000'000;
  std::uint64_t max_steps = 50'000'000;
  // NALC_MAX_BRANCHES overrides max_branches
  static TableauLimits from_env();
};

class TableauExhausted : public std::runtime_error {
 public:
  TableauExhausted(const std::string& what, std::uint64_t branches, std::uint64_t steps)
      : std::runtime_error(what), branches_(branches), steps_(steps) {}
  std::uint64_t branches() const { return branches_; }
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t branches_, steps_;
};

struct ClosedBranch {
  ConstraintSet set;
  Clash clash;
};

struct CompletionResult {
  enum class Status : std::uint8_t { Satisfiable, Unsatisfiable };
  Status status = Status::Satisfiable;
  std::optional<ConstraintSet> witness;  // clash-free completion
  std::vector<ClosedBranch> proof;       // closed branches, first max_recorded of them
  std::uint64_t closed_branches = 0;
  std::uint64_t branch_count = 1;
  std::uint64_t steps = 0;

  bool satisfiable() const { return status == Status::Satisfiable; }
};

struct CompletionOptions {
  TableauLimits limits = TableauLimits::from_env();
  std::size_t max_recorded = 16;
};

CompletionResult complete(const ConstraintSet& s, const CompletionOptions& options = {});
CompletionResult complete(const std::vector<NeutrosophicConstraint>& s, const CompletionOptions& options = {});

// Model of a clash-free completion; `vars` receives the variable placement.
FiniteInterpretation extract_model(const ConstraintSet& completion, VariableAssignment* vars = nullptr);

// "(k) constraint — rule : premises" lines.
std::string format_trace(const ConstraintSet& s, const Clash* clash = nullptr);

}  // namespace nalc
