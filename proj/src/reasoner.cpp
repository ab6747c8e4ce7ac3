#include "nalc/reasoner.hpp"

#include <algorithm>
#include <set>

namespace nalc {

Reasoner::Reasoner(KnowledgeBase kb, CompletionOptions options)
    : kb_(std::move(kb)), expanded_(expand(kb_)), options_(std::move(options)) {
  for (const auto& a : expanded_.assertions) base_.push_back(NeutrosophicConstraint::from(a));
  std::set<Degree> c{Degree::zero(), Degree::one()};
  for (const auto& d : mentioned_degrees(expanded_)) c.insert(d);
  candidates_.assign(c.begin(), c.end());
}

CompletionResult Reasoner::check() const { return complete(base_, options_); }

NeutrosophicAssertion Reasoner::prepare(NeutrosophicAssertion q) const {
  if (!q.bounds.n.in_unit_interval() || !q.bounds.m.in_unit_interval())
    throw std::invalid_argument("query degree outside [0,1]");
  if (!q.assertion.is_role()) q.assertion.expr = unfold(kb_, q.assertion.expr);
  return q;
}

EntailmentProof Reasoner::explain(const NeutrosophicAssertion& query) const {
  EntailmentProof proof;
  proof.answer = true;
  for (const auto& r : refutations(prepare(query))) {
    ConstraintSet s(base_);
    s.add_hypothesis(r, "refutation");
    auto result = complete(s, options_);
    const bool open = result.satisfiable();
    proof.refutations.push_back({r, std::move(result)});
    if (open) {
      proof.answer = false;
      break;
    }
  }
  return proof;
}

Refutation Reasoner::explain_combined(const NeutrosophicAssertion& query) const {
  const auto q = prepare(query);
  using Form = NeutrosophicConstraint::Form;
  const auto form = q.sign == NeutrosophicAssertion::Sign::GeqLeq ? Form::LtGt : Form::GtLt;
  const auto h = NeutrosophicConstraint::make(q.assertion, form, q.bounds.n, q.bounds.m);
  ConstraintSet s(base_);
  s.add_hypothesis(h, "refutation");
  return {h, complete(s, options_)};
}

bool Reasoner::entails_prepared(const NeutrosophicAssertion& q) const {
  for (const auto& r : refutations(q)) {
    ConstraintSet s(base_);
    s.add_hypothesis(r, "refutation");
    CompletionOptions quiet = options_;
    quiet.max_recorded = 0;
    if (complete(s, quiet).satisfiable()) return false;
  }
  return true;
}

bool Reasoner::entails(const NeutrosophicAssertion& query) const { return entails_prepared(prepare(query)); }

namespace {

using Sign = NeutrosophicAssertion::Sign;

// Largest index i in [lo, hi) with holds(i), given holds(lo) and monotone decreasing truth.
template <class F>
std::size_t last_true(std::size_t lo, std::size_t hi, F&& holds, std::uint64_t& calls) {
  // invariant: holds(lo); every index ≥ hi fails (or is out of range)
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    ++calls;
    if (holds(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace

BtvbResult Reasoner::glb(const Assertion& a) const {
  NeutrosophicAssertion probe{a, Sign::GeqLeq, {Degree::zero(), Degree::one()}};
  probe = prepare(probe);
  const auto& c = candidates_;
  const std::size_t k = c.size();
  BtvbResult out;
  out.kind = BtvbResult::Kind::Glb;
  // t: ascending candidates, ⟨α: ≥c[i], ≤1⟩ holds for a prefix
  std::size_t ti = last_true(
      0, k,
      [&](std::size_t i) {
        auto q = probe;
        q.bounds = {c[i], Degree::one()};
        return entails_prepared(q);
      },
      out.candidates_examined);
  // f: descending candidates, ⟨α: ≥0, ≤c[k-1-i]⟩ holds for a prefix
  std::size_t fi = last_true(
      0, k,
      [&](std::size_t i) {
        auto q = probe;
        q.bounds = {Degree::zero(), c[k - 1 - i]};
        return entails_prepared(q);
      },
      out.candidates_examined);
  out.bound = {c[ti], c[k - 1 - fi]};
  return out;
}

BtvbResult Reasoner::lub_direct(const Assertion& a) const {
  NeutrosophicAssertion probe{a, Sign::LeqGeq, {Degree::one(), Degree::zero()}};
  probe = prepare(probe);
  const auto& c = candidates_;
  const std::size_t k = c.size();
  BtvbResult out;
  out.kind = BtvbResult::Kind::Lub;
  // t: descending candidates, ⟨α: ≤c[k-1-i], ≥0⟩
  std::size_t ti = last_true(
      0, k,
      [&](std::size_t i) {
        auto q = probe;
        q.bounds = {c[k - 1 - i], Degree::zero()};
        return entails_prepared(q);
      },
      out.candidates_examined);
  // f: ascending candidates, ⟨α: ≤1, ≥c[i]⟩
  std::size_t fi = last_true(
      0, k,
      [&](std::size_t i) {
        auto q = probe;
        q.bounds = {Degree::one(), c[i]};
        return entails_prepared(q);
      },
      out.candidates_examined);
  out.bound = {c[k - 1 - ti], c[fi]};
  return out;
}

BtvbResult Reasoner::lub(const Assertion& a) const {
  if (a.is_role()) throw UnsupportedQuery("lub of a role assertion is not supported (roles cannot be negated)");
  auto neg = a;
  neg.expr = Concept::negation(a.expr);
  BtvbResult g = glb(neg);
  return {{g.bound.m, g.bound.n}, BtvbResult::Kind::Lub, g.candidates_examined};
}

bool entails(const KnowledgeBase& kb, const NeutrosophicAssertion& query) { return Reasoner(kb).entails(query); }
BtvbResult glb(const KnowledgeBase& kb, const Assertion& a) { return Reasoner(kb).glb(a); }
BtvbResult lub(const KnowledgeBase& kb, const Assertion& a) { return Reasoner(kb).lub(a); }

std::vector<Degree> default_subsumption_grid() {
  return {Degree(0), Degree(1, 4), Degree(1, 2), Degree(3, 4), Degree(1)};
}

bool subsumes(const KnowledgeBase& tbox, const Concept& c, const Concept& d, const std::vector<Degree>& grid,
              const CompletionOptions& options) {
  KnowledgeBase terms;
  terms.terminology = tbox.terminology;
  if (auto v = validate(terms); !v.empty()) throw InvalidKnowledgeBase(std::move(v));
  const Concept cu = unfold(terms, c), du = unfold(terms, d);
  const Object a = Object::individual("a");
  for (const auto& n : grid) {
    for (const auto& m : grid) {
      KnowledgeBase kb;
      kb.assertions.push_back({Assertion::of_concept(cu, a), Sign::GeqLeq, {n, m}});
      if (!Reasoner(kb, options).entails({Assertion::of_concept(du, a), Sign::GeqLeq, {n, m}})) return false;
    }
  }
  return true;
}

}  // namespace nalc
