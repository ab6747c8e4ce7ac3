#pragma once

#include "nalc/assertion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nalc {

// Lower: t ≥ n (or >), f ≤ m (or <).   Upper: t ≤ n (or <), f ≥ m (or >).
enum class Direction : std::uint8_t { Lower, Upper };

struct Bound {
  Degree value;
  bool strict = false;
  friend bool operator==(const Bound&, const Bound&) = default;
  friend auto operator<=>(const Bound&, const Bound&) = default;
};

// One-sided restriction on a single degree: v ≥ b, v > b, v ≤ b or v < b.
struct HalfBound {
  bool lower = true;
  Degree value;
  bool strict = false;

  bool holds(const Degree& v) const {
    if (lower) return strict ? v > value : v >= value;
    return strict ? v < value : v <= value;
  }
  // v ≥ 0 / v ≤ 1
  bool vacuous() const { return !strict && (lower ? value == Degree::zero() : value == Degree::one()); }
  // does *this follow from `other` (same side)?
  bool implied_by(const HalfBound& other) const;
};

// lower bound `lo` and upper bound `hi` admit no common value
bool incompatible(const HalfBound& lo, const HalfBound& hi);

// A neutrosophic constraint over objects (individuals or variables). Strictness
// is tracked per component; the four classic forms are the uniform cases.
struct NeutrosophicConstraint {
  enum class Form : std::uint8_t { GeqLeq, GtLt, LeqGeq, LtGt };

  Assertion assertion;
  Direction direction = Direction::Lower;
  Bound truth;    // bound on the t-component
  Bound falsity;  // bound on the f-component

  static NeutrosophicConstraint make(Assertion a, Form form, Degree n, Degree m);
  static NeutrosophicConstraint lower(Assertion a, Bound t, Bound f) { return {std::move(a), Direction::Lower, t, f}; }
  static NeutrosophicConstraint upper(Assertion a, Bound t, Bound f) { return {std::move(a), Direction::Upper, t, f}; }
  static NeutrosophicConstraint from(const NeutrosophicAssertion& a);

  // nullopt for mixed strictness
  std::optional<Form> form() const;

  HalfBound truth_half() const { return {direction == Direction::Lower, truth.value, truth.strict}; }
  HalfBound falsity_half() const { return {direction == Direction::Upper, falsity.value, falsity.strict}; }

  // satisfied by the given ⟨t, f⟩
  bool holds(const DegreePair& tf) const { return truth_half().holds(tf.n) && falsity_half().holds(tf.m); }

  friend bool operator==(const NeutrosophicConstraint& a, const NeutrosophicConstraint& b) {
    return a.direction == b.direction && a.truth == b.truth && a.falsity == b.falsity && a.assertion == b.assertion;
  }
  friend bool operator<(const NeutrosophicConstraint& a, const NeutrosophicConstraint& b);
};

// Vacuous padding components.
Bound vacuous_truth(Direction d);
Bound vacuous_falsity(Direction d);

// Σ ⊨ a iff Σ ∪ {r} is unsatisfiable for every returned r: one per component
// (t below n, resp. f above m, for a lower-form a; dually for upper).
std::vector<NeutrosophicConstraint> refutations(const NeutrosophicAssertion& a);

// "A(a) >= 0.6 <= 0.5", "A(a) < 0.6 > 0.5"
std::string format_constraint(const NeutrosophicConstraint& c);
// "≥,≤" style relation pair used in rule names: ">=,<=" ...
std::string relation_pair(const NeutrosophicConstraint& c);

}  // namespace nalc
