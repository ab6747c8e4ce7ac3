#pragma once

#include "nalc/concept.hpp"
#include "nalc/degree.hpp"

#include <compare>
#include <string>
#include <tuple>

namespace nalc {

// Individual or tableau variable. The two namespaces never mix: a variable
// named "x1" is distinct from an individual named "x1".
struct Object {
  enum class Kind : std::uint8_t { Individual, Variable };
  Kind kind = Kind::Individual;
  std::string name;

  static Object individual(std::string n) { return {Kind::Individual, std::move(n)}; }
  static Object variable(std::string n) { return {Kind::Variable, std::move(n)}; }
  bool is_variable() const { return kind == Kind::Variable; }

  friend auto operator<=>(const Object&, const Object&) = default;
  friend bool operator==(const Object&, const Object&) = default;
};

struct DegreePair {
  Degree n, m;
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

// C(ω) or R(ω1, ω2).
struct Assertion {
  enum class Kind : std::uint8_t { Concept, Role };
  Kind kind = Kind::Concept;
  Concept expr;   // Kind::Concept
  std::string role;  // Kind::Role
  Object subject;
  Object object;     // Kind::Role

  static Assertion of_concept(Concept c, Object s) { return {Kind::Concept, c, {}, std::move(s), {}}; }
  static Assertion of_role(std::string r, Object s, Object o) {
    return {Kind::Role, Concept::top(), std::move(r), std::move(s), std::move(o)};
  }
  bool is_role() const { return kind == Kind::Role; }

  friend bool operator==(const Assertion& a, const Assertion& b) {
    return a.kind == b.kind && a.subject == b.subject &&
           (a.kind == Kind::Concept ? a.expr == b.expr : a.role == b.role && a.object == b.object);
  }
  friend bool operator<(const Assertion& a, const Assertion& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == Kind::Concept) return std::tie(a.expr, a.subject) < std::tie(b.expr, b.subject);
    return std::tie(a.role, a.subject, a.object) < std::tie(b.role, b.subject, b.object);
  }
};

std::string format_object(const Object& o);
// "(some R A)(a)", "R(a,b)".
std::string format_assertion(const Assertion& a);

// ⟨α: ≥n, ≤m⟩ (GeqLeq) or ⟨α: ≤n, ≥m⟩ (LeqGeq).
struct NeutrosophicAssertion {
  enum class Sign : std::uint8_t { GeqLeq, LeqGeq };
  Assertion assertion;
  Sign sign = Sign::GeqLeq;
  DegreePair bounds;

  friend bool operator==(const NeutrosophicAssertion& a, const NeutrosophicAssertion& b) {
    return a.assertion == b.assertion && a.sign == b.sign && a.bounds == b.bounds;
  }
};

// "A(a) >= 0.6 <= 0.5" — the KB-file rendering without the "assert" keyword.
std::string format_neutrosophic(const NeutrosophicAssertion& a);

}  // namespace nalc
