#include "nalc/kb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace nalc {

std::string format_object(const Object& o) { return o.name; }

std::string format_assertion(const Assertion& a) {
  if (a.is_role()) return a.role + "(" + format_object(a.subject) + "," + format_object(a.object) + ")";
  return a.expr.text() + "(" + format_object(a.subject) + ")";
}

std::string format_neutrosophic(const NeutrosophicAssertion& a) {
  const bool geq = a.sign == NeutrosophicAssertion::Sign::GeqLeq;
  return format_assertion(a.assertion) + (geq ? " >= " : " <= ") + a.bounds.n.str() + (geq ? " <= " : " >= ") +
         a.bounds.m.str();
}

std::string starred(const std::string& name) { return name + "*"; }

InvalidKnowledgeBase::InvalidKnowledgeBase(std::vector<Violation> v)
    : std::runtime_error([&] {
        std::string msg = "invalid knowledge base";
        for (const auto& x : v) msg += "; " + x.message;
        return msg;
      }()),
      violations_(std::move(v)) {}

namespace {

std::set<std::string> names_in_kb(const KnowledgeBase& kb) {
  std::set<std::string> out;
  for (const auto& a : kb.assertions)
    if (!a.assertion.is_role()) out.merge(atomic_names(a.assertion.expr));
  for (const auto& ax : kb.terminology) {
    out.insert(ax.lhs);
    out.merge(atomic_names(ax.rhs));
  }
  return out;
}

// First cycle found in the lhs → rhs-name dependency graph, in traversal order.
std::vector<std::string> find_cycle(const std::map<std::string, const TerminologicalAxiom*>& defs) {
  enum class Mark { None, Active, Done };
  std::map<std::string, Mark> mark;
  std::vector<std::string> stack, cycle;
  std::function<bool(const std::string&)> visit = [&](const std::string& a) {
    mark[a] = Mark::Active;
    stack.push_back(a);
    for (const auto& b : atomic_names(defs.at(a)->rhs)) {
      if (!defs.count(b)) continue;
      if (mark[b] == Mark::Active) {
        cycle.assign(std::find(stack.begin(), stack.end(), b), stack.end());
        return true;
      }
      if (mark[b] == Mark::None && visit(b)) return true;
    }
    stack.pop_back();
    mark[a] = Mark::Done;
    return false;
  };
  for (const auto& [name, ax] : defs)
    if (mark[name] == Mark::None && visit(name)) return cycle;
  return {};
}

}  // namespace

std::vector<Violation> validate(const KnowledgeBase& kb) {
  std::vector<Violation> out;
  for (const auto& a : kb.assertions) {
    if (!a.bounds.n.in_unit_interval() || !a.bounds.m.in_unit_interval())
      out.push_back({Violation::Kind::DegreeRange, "degree outside [0,1] in " + format_neutrosophic(a), {}});
    if (a.assertion.subject.is_variable() || (a.assertion.is_role() && a.assertion.object.is_variable()))
      out.push_back({Violation::Kind::NotIndividual, "variable in knowledge base: " + format_assertion(a.assertion), {}});
  }
  std::map<std::string, const TerminologicalAxiom*> defs;
  for (const auto& ax : kb.terminology) {
    if (!defs.emplace(ax.lhs, &ax).second)
      out.push_back({Violation::Kind::DuplicateLhs, "concept " + ax.lhs + " appears more than once as a left-hand side",
                     {ax.lhs}});
  }
  const auto names = names_in_kb(kb);
  for (const auto& ax : kb.terminology) {
    if (ax.kind == TerminologicalAxiom::Kind::Specialization && names.count(starred(ax.lhs)))
      out.push_back({Violation::Kind::StarCollision,
                     "name " + starred(ax.lhs) + " is reserved for the expansion of " + ax.lhs, {starred(ax.lhs)}});
  }
  if (auto cycle = find_cycle(defs); !cycle.empty()) {
    std::string shown;
    for (const auto& c : cycle) shown += (shown.empty() ? "" : " -> ") + c;
    out.push_back({Violation::Kind::Cycle, "cyclic definition: " + shown + " -> " + cycle.front(), cycle});
  }
  return out;
}

namespace {

// Memoised unfolding; post-order DFS visits definitions in reverse topological order.
class Unfolder {
 public:
  explicit Unfolder(const KnowledgeBase& kb) {
    if (auto v = validate(kb); !v.empty()) throw InvalidKnowledgeBase(std::move(v));
    for (const auto& ax : kb.terminology) {
      Concept rhs = ax.kind == TerminologicalAxiom::Kind::Specialization
                        ? Concept::conj(ax.rhs, Concept::atomic(starred(ax.lhs)))
                        : ax.rhs;
      rhs_.emplace(ax.lhs, rhs);
    }
  }

  Concept operator()(const Concept& c) {
    return substitute(c, [this](const std::string& name) -> const Concept* { return resolve(name); });
  }

 private:
  const Concept* resolve(const std::string& name) {
    if (auto it = done_.find(name); it != done_.end()) return &it->second;
    auto it = rhs_.find(name);
    if (it == rhs_.end()) return nullptr;
    Concept unfolded = (*this)(it->second);
    return &done_.emplace(name, unfolded).first->second;
  }

  std::map<std::string, Concept> rhs_, done_;
};

}  // namespace

KnowledgeBase expand(const KnowledgeBase& kb) {
  Unfolder unfold(kb);
  KnowledgeBase out;
  out.assertions.reserve(kb.assertions.size());
  for (auto a : kb.assertions) {
    if (!a.assertion.is_role()) a.assertion.expr = unfold(a.assertion.expr);
    out.assertions.push_back(std::move(a));
  }
  return out;
}

Concept unfold(const KnowledgeBase& kb, const Concept& c) {
  if (kb.terminology.empty()) return c;
  return Unfolder(kb)(c);
}

std::vector<Degree> mentioned_degrees(const KnowledgeBase& kb) {
  std::set<Degree> s;
  for (const auto& a : kb.assertions) s.insert({a.bounds.n, a.bounds.m});
  return {s.begin(), s.end()};
}

// ---- fuzzy ---------------------------------------------------------------

std::string format_fuzzy(const FuzzyAssertion& a) {
  return format_assertion(a.assertion) + (a.relation == FuzzyAssertion::Relation::Geq ? " >= " : " <= ") +
         a.degree.str();
}

NeutrosophicAssertion embed_fuzzy(const FuzzyAssertion& a) {
  const bool geq = a.relation == FuzzyAssertion::Relation::Geq;
  return {a.assertion, geq ? NeutrosophicAssertion::Sign::GeqLeq : NeutrosophicAssertion::Sign::LeqGeq,
          {a.degree, a.degree.complement()}};
}

KnowledgeBase embed_fuzzy(const FuzzyKnowledgeBase& fkb) {
  KnowledgeBase kb;
  for (const auto& a : fkb.assertions) kb.assertions.push_back(embed_fuzzy(a));
  kb.terminology = fkb.terminology;
  return kb;
}

FuzzyAssertion sharp(const NeutrosophicAssertion& a) {
  const bool geq = a.sign == NeutrosophicAssertion::Sign::GeqLeq;
  return {a.assertion, geq ? FuzzyAssertion::Relation::Geq : FuzzyAssertion::Relation::Leq, a.bounds.n};
}

FuzzyAssertion star(const NeutrosophicAssertion& a) {
  const bool geq = a.sign == NeutrosophicAssertion::Sign::GeqLeq;
  return {a.assertion, geq ? FuzzyAssertion::Relation::Leq : FuzzyAssertion::Relation::Geq, a.bounds.m};
}

bool vacuous(const FuzzyAssertion& a) {
  return a.relation == FuzzyAssertion::Relation::Geq ? a.degree == Degree::zero() : a.degree == Degree::one();
}

namespace {

template <class F>
FuzzyKnowledgeBase project(const KnowledgeBase& kb, F&& f) {
  FuzzyKnowledgeBase out;
  for (const auto& a : kb.assertions)
    if (auto p = f(a); !vacuous(p)) out.assertions.push_back(std::move(p));
  out.terminology = kb.terminology;
  return out;
}

}  // namespace

FuzzyKnowledgeBase sharp(const KnowledgeBase& kb) {
  return project(kb, [](const NeutrosophicAssertion& a) { return sharp(a); });
}

FuzzyKnowledgeBase star(const KnowledgeBase& kb) {
  return project(kb, [](const NeutrosophicAssertion& a) { return star(a); });
}

}  // namespace nalc
