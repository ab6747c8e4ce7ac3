#include "nalc/constraint.hpp"

#include <tuple>

namespace nalc {

bool HalfBound::implied_by(const HalfBound& o) const {
  if (o.lower != lower) return false;
  if (vacuous()) return true;
  if (o.value == value) return o.strict || !strict;
  return lower ? o.value > value : o.value < value;
}

bool incompatible(const HalfBound& lo, const HalfBound& hi) {
  return lo.value > hi.value || (lo.value == hi.value && (lo.strict || hi.strict));
}

NeutrosophicConstraint NeutrosophicConstraint::make(Assertion a, Form form, Degree n, Degree m) {
  switch (form) {
    case Form::GeqLeq: return lower(std::move(a), {n, false}, {m, false});
    case Form::GtLt: return lower(std::move(a), {n, true}, {m, true});
    case Form::LeqGeq: return upper(std::move(a), {n, false}, {m, false});
    case Form::LtGt: return upper(std::move(a), {n, true}, {m, true});
  }
  return {};
}

NeutrosophicConstraint NeutrosophicConstraint::from(const NeutrosophicAssertion& a) {
  return make(a.assertion, a.sign == NeutrosophicAssertion::Sign::GeqLeq ? Form::GeqLeq : Form::LeqGeq, a.bounds.n,
              a.bounds.m);
}

std::optional<NeutrosophicConstraint::Form> NeutrosophicConstraint::form() const {
  if (truth.strict != falsity.strict) return std::nullopt;
  if (direction == Direction::Lower) return truth.strict ? Form::GtLt : Form::GeqLeq;
  return truth.strict ? Form::LtGt : Form::LeqGeq;
}

bool operator<(const NeutrosophicConstraint& a, const NeutrosophicConstraint& b) {
  if (!(a.assertion == b.assertion)) return a.assertion < b.assertion;
  return std::tie(a.direction, a.truth, a.falsity) < std::tie(b.direction, b.truth, b.falsity);
}

Bound vacuous_truth(Direction d) { return {d == Direction::Lower ? Degree::zero() : Degree::one(), false}; }
Bound vacuous_falsity(Direction d) { return {d == Direction::Lower ? Degree::one() : Degree::zero(), false}; }

std::vector<NeutrosophicConstraint> refutations(const NeutrosophicAssertion& a) {
  const Degree n = a.bounds.n, m = a.bounds.m;
  std::vector<NeutrosophicConstraint> out;
  // components that every value meets (t ≥ 0, f ≤ 1, ...) need no refutation
  if (a.sign == NeutrosophicAssertion::Sign::GeqLeq) {
    // t < n  |  f > m
    if (n != Degree::zero())
      out.push_back(NeutrosophicConstraint::upper(a.assertion, {n, true}, vacuous_falsity(Direction::Upper)));
    if (m != Degree::one())
      out.push_back(NeutrosophicConstraint::upper(a.assertion, vacuous_truth(Direction::Upper), {m, true}));
  } else {
    // t > n  |  f < m
    if (n != Degree::one())
      out.push_back(NeutrosophicConstraint::lower(a.assertion, {n, true}, vacuous_falsity(Direction::Lower)));
    if (m != Degree::zero())
      out.push_back(NeutrosophicConstraint::lower(a.assertion, vacuous_truth(Direction::Lower), {m, true}));
  }
  return out;
}

namespace {

const char* rel(const HalfBound& h) {
  if (h.lower) return h.strict ? ">" : ">=";
  return h.strict ? "<" : "<=";
}

}  // namespace

std::string relation_pair(const NeutrosophicConstraint& c) {
  return std::string(rel(c.truth_half())) + "," + rel(c.falsity_half());
}

std::string format_constraint(const NeutrosophicConstraint& c) {
  auto t = c.truth_half(), f = c.falsity_half();
  return format_assertion(c.assertion) + " " + rel(t) + " " + t.value.str() + " " + rel(f) + " " + f.value.str();
}

}  // namespace nalc
