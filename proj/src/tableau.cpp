#include "nalc/tableau.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace nalc {

// ---- constraint sets ----------------------------------------------------------

ConstraintSet::ConstraintSet(const std::vector<NeutrosophicConstraint>& hypotheses) {
  for (const auto& c : hypotheses) add_hypothesis(c);
}

std::optional<std::size_t> ConstraintSet::add(const NeutrosophicConstraint& c) {
  if (!present_.insert(c).second) return std::nullopt;
  std::size_t i = items_.size();
  items_.push_back(c);
  by_assertion_[c.assertion].push_back(i);
  if (c.assertion.is_role() && c.direction == Direction::Lower)
    edges_[{c.assertion.role, c.assertion.subject}].push_back(i);
  return i;
}

void ConstraintSet::add_hypothesis(const NeutrosophicConstraint& c, const std::string& label) {
  if (auto i = add(c)) record(label, {}, {*i});
}

void ConstraintSet::record(std::string rule, std::vector<std::size_t> premises, std::vector<std::size_t> conclusions) {
  trace_.push_back({std::move(rule), std::move(premises), std::move(conclusions)});
}

const std::vector<std::size_t>& ConstraintSet::on(const Assertion& a) const {
  static const std::vector<std::size_t> none;
  auto it = by_assertion_.find(a);
  return it == by_assertion_.end() ? none : it->second;
}

const std::vector<std::size_t>& ConstraintSet::edges_from(const std::string& role, const Object& subject) const {
  static const std::vector<std::size_t> none;
  auto it = edges_.find({role, subject});
  return it == edges_.end() ? none : it->second;
}

bool ConstraintSet::implies(const NeutrosophicConstraint& c) const {
  const HalfBound t = c.truth_half(), f = c.falsity_half();
  bool t_ok = t.vacuous(), f_ok = f.vacuous();
  if (t_ok && f_ok) return true;
  for (std::size_t i : on(c.assertion)) {
    t_ok = t_ok || t.implied_by(items_[i].truth_half());
    f_ok = f_ok || f.implied_by(items_[i].falsity_half());
    if (t_ok && f_ok) return true;
  }
  return false;
}

Object ConstraintSet::fresh_variable() { return Object::variable("x" + std::to_string(++fresh_)); }

std::vector<Object> ConstraintSet::objects() const {
  std::vector<Object> out;
  std::set<Object> seen;
  auto visit = [&](const Object& o) {
    if (seen.insert(o).second) out.push_back(o);
  };
  for (const auto& c : items_) {
    visit(c.assertion.subject);
    if (c.assertion.is_role()) visit(c.assertion.object);
  }
  // individuals first, each group in order of appearance
  std::stable_partition(out.begin(), out.end(), [](const Object& o) { return !o.is_variable(); });
  return out;
}

// ---- clashes ----------------------------------------------------------------------

bool self_clash(const NeutrosophicConstraint& c) {
  const HalfBound t = c.truth_half(), f = c.falsity_half();
  if (!c.assertion.is_role()) {
    const ConceptKind k = c.assertion.expr.kind();
    if (k == ConceptKind::Top) return !c.holds({Degree::one(), Degree::zero()});
    if (k == ConceptKind::Bottom) return !c.holds({Degree::zero(), Degree::one()});
  }
  // no value in [0,1] meets the bound
  auto empty = [](const HalfBound& h) {
    return h.lower ? incompatible(h, {false, Degree::one(), false}) : incompatible({true, Degree::zero(), false}, h);
  };
  return empty(t) || empty(f);
}

bool conjugated(const NeutrosophicConstraint& a, const NeutrosophicConstraint& b) {
  if (!(a.assertion == b.assertion)) throw std::invalid_argument("conjugated: constraints on different assertions");
  if (a.direction == b.direction) return false;
  const auto& lo = a.direction == Direction::Lower ? a : b;
  const auto& up = a.direction == Direction::Lower ? b : a;
  return incompatible(lo.truth_half(), up.truth_half()) || incompatible(up.falsity_half(), lo.falsity_half());
}

namespace {

std::optional<Clash> clash_among(const ConstraintSet& s, std::size_t from) {
  for (std::size_t k = from; k < s.size(); ++k) {
    const auto& c = s[k];
    if (self_clash(c)) {
      std::string reason = "out of range";
      if (!c.assertion.is_role() && c.assertion.expr.kind() == ConceptKind::Bottom) reason = "bottom";
      if (!c.assertion.is_role() && c.assertion.expr.kind() == ConceptKind::Top) reason = "top";
      return Clash{reason, {k}};
    }
    for (std::size_t j : s.on(c.assertion))
      if (j < k && conjugated(s[j], c)) return Clash{"conjugated pair", {j, k}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Clash> find_clash(const ConstraintSet& s) { return clash_among(s, 0); }

std::string describe(const Clash& clash, const ConstraintSet& s) {
  std::string out = clash.reason + ":";
  for (std::size_t i : clash.constraints) out += " " + format_constraint(s[i]) + ";";
  out.pop_back();
  return out;
}

// ---- rules ------------------------------------------------------------------------

namespace {

const char* symbol(const HalfBound& h) {
  if (h.lower) return h.strict ? ">" : "≥";
  return h.strict ? "<" : "≤";
}

std::string rule_name(const char* op, const NeutrosophicConstraint& c) {
  return std::string("(") + op + "_{" + symbol(c.truth_half()) + "," + symbol(c.falsity_half()) + "})";
}

NeutrosophicConstraint on_concept(const Concept& expr, const Object& o, Direction d, Bound t, Bound f) {
  return {Assertion::of_concept(expr, o), d, t, f};
}

NeutrosophicConstraint on_role(const std::string& role, const Object& a, const Object& b, Bound t, Bound f) {
  return NeutrosophicConstraint::lower(Assertion::of_role(role, a, b), t, f);
}

// ⟨¬C: t, f⟩ ↦ ⟨C: f, t⟩ with the direction flipped
NeutrosophicConstraint negate(const NeutrosophicConstraint& c) {
  const Direction flipped = c.direction == Direction::Lower ? Direction::Upper : Direction::Lower;
  return on_concept(c.assertion.expr.inner(), c.assertion.subject, flipped, c.falsity, c.truth);
}

// ∀-lower / ∃-upper propagation along a lower role constraint; component-wise.
std::optional<NeutrosophicConstraint> propagate(const NeutrosophicConstraint& c, const NeutrosophicConstraint& r) {
  const bool all = c.assertion.expr.kind() == ConceptKind::Forall;
  const Bound& n = c.truth;
  const Bound& m = c.falsity;
  bool fire_t, fire_f;
  if (all) {
    // max(R^f, C^t) ⋈ n everywhere; R^f cannot reach n
    fire_t = incompatible({true, n.value, n.strict}, r.falsity_half());
    // min(R^t, C^f) ⋈ m everywhere; R^t cannot stay below m
    fire_f = incompatible(r.truth_half(), {false, m.value, m.strict});
  } else {
    fire_t = incompatible(r.truth_half(), {false, n.value, n.strict});
    fire_f = incompatible({true, m.value, m.strict}, r.falsity_half());
  }
  fire_t = fire_t && !c.truth_half().vacuous();
  fire_f = fire_f && !c.falsity_half().vacuous();
  if (!fire_t && !fire_f) return std::nullopt;
  return on_concept(c.assertion.expr.filler(), r.assertion.object, c.direction,
                    fire_t ? n : vacuous_truth(c.direction), fire_f ? m : vacuous_falsity(c.direction));
}

// ⊓-upper / ⊔-lower: each non-vacuous component is realised by one operand.
std::vector<std::vector<NeutrosophicConstraint>> cover(const NeutrosophicConstraint& c) {
  const Concept& whole = c.assertion.expr;
  const Object& o = c.assertion.subject;
  const Direction d = c.direction;
  const Concept operands[2] = {whole.left(), whole.right()};
  const bool t_live = !c.truth_half().vacuous(), f_live = !c.falsity_half().vacuous();
  std::vector<std::vector<NeutrosophicConstraint>> out;
  if (!t_live && !f_live) return out;
  for (int ti = 0; ti < (t_live ? 2 : 1); ++ti) {
    for (int fi = 0; fi < (f_live ? 2 : 1); ++fi) {
      std::vector<NeutrosophicConstraint> branch;
      if (t_live && f_live && ti == fi) {
        branch.push_back(on_concept(operands[ti], o, d, c.truth, c.falsity));
      } else {
        if (t_live) branch.push_back(on_concept(operands[ti], o, d, c.truth, vacuous_falsity(d)));
        if (f_live) branch.push_back(on_concept(operands[fi], o, d, vacuous_truth(d), c.falsity));
      }
      out.push_back(std::move(branch));
    }
  }
  return out;
}

struct WitnessNeed {
  Bound role_t, role_f;  // lower-form role constraint
  Bound c_t, c_f;        // filler constraint, in the premise's direction
};

// ∃-lower / ∀-upper: requirements a successor must meet for the t-part and the f-part.
std::pair<WitnessNeed, WitnessNeed> witness_needs(const NeutrosophicConstraint& c) {
  const Direction d = c.direction;
  const Bound vt = vacuous_truth(Direction::Lower), vf = vacuous_falsity(Direction::Lower);
  const Bound ct = vacuous_truth(d), cf = vacuous_falsity(d);
  if (c.assertion.expr.kind() == ConceptKind::Exists) {
    // min(R^t, C^t) ⋈ n somewhere;  max(R^f, C^f) ⋈ m somewhere
    return {{c.truth, vf, c.truth, cf}, {vt, c.falsity, ct, c.falsity}};
  }
  // max(R^f, C^t) ⋈ n somewhere;  min(R^t, C^f) ⋈ m somewhere
  return {{vt, c.truth, c.truth, cf}, {c.falsity, vf, ct, c.falsity}};
}

bool witnessed(const ConstraintSet& s, const NeutrosophicConstraint& c, const WitnessNeed& need) {
  const std::string& role = c.assertion.expr.role();
  const Object& w = c.assertion.subject;
  const Concept& filler = c.assertion.expr.filler();
  std::set<Object> tried;
  for (std::size_t j : s.edges_from(role, w)) {
    const Object& succ = s[j].assertion.object;
    if (!tried.insert(succ).second) continue;
    if (s.implies(on_role(role, w, succ, need.role_t, need.role_f)) &&
        s.implies(on_concept(filler, succ, c.direction, need.c_t, need.c_f)))
      return true;
  }
  return false;
}

void add_witness(std::vector<NeutrosophicConstraint>& out, const NeutrosophicConstraint& c, const Object& x,
                 const WitnessNeed& need) {
  out.push_back(on_role(c.assertion.expr.role(), c.assertion.subject, x, need.role_t, need.role_f));
  out.push_back(on_concept(c.assertion.expr.filler(), x, c.direction, need.c_t, need.c_f));
}

WitnessNeed merge(const WitnessNeed& a, const WitnessNeed& b, Direction d) {
  // each field is vacuous in exactly one of a, b
  auto pick = [](const Bound& x, const Bound& y, const Bound& vac) { return x == vac ? y : x; };
  return {pick(a.role_t, b.role_t, vacuous_truth(Direction::Lower)),
          pick(a.role_f, b.role_f, vacuous_falsity(Direction::Lower)), pick(a.c_t, b.c_t, vacuous_truth(d)),
          pick(a.c_f, b.c_f, vacuous_falsity(d))};
}

bool is_lower(const NeutrosophicConstraint& c) { return c.direction == Direction::Lower; }

}  // namespace

std::optional<RuleApplication> next_rule(ConstraintSet& s) {
  // deterministic rules, earliest premise first
  for (std::size_t i = 0; i < s.size(); ++i) {
    const NeutrosophicConstraint c = s[i];
    if (c.assertion.is_role()) continue;
    const Concept& expr = c.assertion.expr;
    switch (expr.kind()) {
      case ConceptKind::Not: {
        auto out = negate(c);
        if (!s.implies(out)) return RuleApplication{rule_name("¬", c), {i}, {{out}}};
        break;
      }
      case ConceptKind::And:
      case ConceptKind::Or: {
        const bool is_and = expr.kind() == ConceptKind::And;
        if (is_and != is_lower(c)) break;
        std::vector<NeutrosophicConstraint> out;
        for (const Concept& part : {expr.left(), expr.right()}) {
          auto k = on_concept(part, c.assertion.subject, c.direction, c.truth, c.falsity);
          if (!s.implies(k) && std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
        }
        if (!out.empty()) return RuleApplication{rule_name(is_and ? "⊓" : "⊔", c), {i}, {out}};
        break;
      }
      case ConceptKind::Forall:
      case ConceptKind::Exists: {
        const bool all = expr.kind() == ConceptKind::Forall;
        if (all != is_lower(c)) break;
        for (std::size_t j : s.edges_from(expr.role(), c.assertion.subject)) {
          if (auto k = propagate(c, s[j]); k && !s.implies(*k))
            return RuleApplication{rule_name(all ? "∀" : "∃", c), {i, j}, {{*k}}};
        }
        break;
      }
      default: break;
    }
  }
  // branching rules
  for (std::size_t i = 0; i < s.size(); ++i) {
    const NeutrosophicConstraint& c = s[i];
    if (c.assertion.is_role()) continue;
    const ConceptKind k = c.assertion.expr.kind();
    if (!((k == ConceptKind::And && !is_lower(c)) || (k == ConceptKind::Or && is_lower(c)))) continue;
    auto branches = cover(c);
    if (branches.empty()) continue;
    bool done = std::any_of(branches.begin(), branches.end(), [&](const auto& b) {
      return std::all_of(b.begin(), b.end(), [&](const auto& x) { return s.implies(x); });
    });
    if (!done) return RuleApplication{rule_name(k == ConceptKind::And ? "⊓" : "⊔", c), {i}, std::move(branches)};
  }
  // generating rules
  for (std::size_t i = 0; i < s.size(); ++i) {
    const NeutrosophicConstraint c = s[i];
    if (c.assertion.is_role()) continue;
    const ConceptKind k = c.assertion.expr.kind();
    if (!((k == ConceptKind::Exists && is_lower(c)) || (k == ConceptKind::Forall && !is_lower(c)))) continue;
    auto [t_need, f_need] = witness_needs(c);
    const bool t_open = !c.truth_half().vacuous() && !witnessed(s, c, t_need);
    const bool f_open = !c.falsity_half().vacuous() && !witnessed(s, c, f_need);
    if (!t_open && !f_open) continue;
    RuleApplication app{rule_name(k == ConceptKind::Exists ? "∃" : "∀", c), {i}, {}, true};
    if (t_open && f_open) {
      // one successor for both parts, or separate successors
      std::vector<NeutrosophicConstraint> merged, split;
      add_witness(merged, c, s.fresh_variable(), merge(t_need, f_need, c.direction));
      add_witness(split, c, s.fresh_variable(), t_need);
      add_witness(split, c, s.fresh_variable(), f_need);
      app.branches = {std::move(merged), std::move(split)};
    } else {
      std::vector<NeutrosophicConstraint> one;
      add_witness(one, c, s.fresh_variable(), t_open ? t_need : f_need);
      app.branches = {std::move(one)};
    }
    return app;
  }
  return std::nullopt;
}

namespace {

ConstraintSet extend(const ConstraintSet& s, const RuleApplication& app, std::size_t b) {
  ConstraintSet out = s;
  std::vector<std::size_t> added;
  for (const auto& c : app.branches[b])
    if (auto i = out.add(c)) added.push_back(*i);
  out.record(app.rule, app.premises, std::move(added));
  return out;
}

}  // namespace

std::optional<std::vector<ConstraintSet>> apply_rules(const ConstraintSet& s) {
  ConstraintSet work = s;
  auto app = next_rule(work);
  if (!app) return std::nullopt;
  std::vector<ConstraintSet> out;
  for (std::size_t b = 0; b < app->branches.size(); ++b) out.push_back(extend(work, *app, b));
  return out;
}

// ---- completion ---------------------------------------------------------------------

TableauLimits TableauLimits::from_env() {
  TableauLimits l;
  if (const char* v = std::getenv("NALC_MAX_BRANCHES")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) l.max_branches = n;
  }
  return l;
}

CompletionResult complete(const ConstraintSet& s, const CompletionOptions& options) {
  CompletionResult result;
  result.status = CompletionResult::Status::Unsatisfiable;
  struct Frame {
    ConstraintSet set;
    std::size_t checked_from;
  };
  std::vector<Frame> stack{{s, 0}};
  int fresh = s.fresh_counter();

  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    ConstraintSet& cur = frame.set;
    std::size_t from = frame.checked_from;
    while (true) {
      if (auto clash = clash_among(cur, from)) {
        if (result.proof.size() < options.max_recorded) result.proof.push_back({cur, *clash});
        ++result.closed_branches;
        break;
      }
      from = cur.size();
      cur.set_fresh_counter(std::max(cur.fresh_counter(), fresh));
      auto app = next_rule(cur);
      fresh = std::max(fresh, cur.fresh_counter());
      if (!app) {
        result.status = CompletionResult::Status::Satisfiable;
        result.witness = std::move(cur);
        return result;
      }
      if (++result.steps > options.limits.max_steps)
        throw TableauExhausted("tableau step limit reached", result.branch_count, result.steps);
      if (app->branches.size() == 1) {
        cur = extend(cur, *app, 0);
        continue;
      }
      result.branch_count += app->branches.size() - 1;
      if (result.branch_count > options.limits.max_branches)
        throw TableauExhausted("tableau branch limit reached", result.branch_count, result.steps);
      for (std::size_t b = app->branches.size(); b-- > 0;) stack.push_back({extend(cur, *app, b), from});
      break;
    }
  }
  return result;
}

CompletionResult complete(const std::vector<NeutrosophicConstraint>& s, const CompletionOptions& options) {
  return complete(ConstraintSet(s), options);
}

// ---- models ---------------------------------------------------------------------------

namespace {

// Least value above every lower bound (t) / greatest below every upper bound (f);
// a strict bound moves half-way to the next mentioned degree.
class ValuePicker {
 public:
  explicit ValuePicker(const ConstraintSet& s) {
    std::set<Degree> v{Degree::zero(), Degree::one()};
    for (const auto& c : s.constraints()) v.insert({c.truth.value, c.falsity.value});
    values_.assign(v.begin(), v.end());
  }

  Degree least_above(const std::vector<HalfBound>& lower) const {
    const HalfBound* best = nullptr;
    for (const auto& h : lower)
      if (!best || h.value > best->value || (h.value == best->value && h.strict)) best = &h;
    if (!best) return Degree::zero();
    if (!best->strict) return best->value;
    auto next = std::upper_bound(values_.begin(), values_.end(), best->value);
    return Degree::midpoint(best->value, next == values_.end() ? Degree::one() : *next);
  }

  Degree greatest_below(const std::vector<HalfBound>& upper) const {
    const HalfBound* best = nullptr;
    for (const auto& h : upper)
      if (!best || h.value < best->value || (h.value == best->value && h.strict)) best = &h;
    if (!best) return Degree::one();
    if (!best->strict) return best->value;
    auto prev = std::lower_bound(values_.begin(), values_.end(), best->value);
    return Degree::midpoint(prev == values_.begin() ? Degree::zero() : *std::prev(prev), best->value);
  }

 private:
  std::vector<Degree> values_;
};

}  // namespace

FiniteInterpretation extract_model(const ConstraintSet& completion, VariableAssignment* vars) {
  if (find_clash(completion)) throw std::invalid_argument("extract_model: constraint set contains a clash");
  FiniteInterpretation I;
  std::map<Object, std::size_t> element;
  for (const auto& o : completion.objects()) {
    element[o] = I.domain.size();
    I.domain.push_back(o.name);
    if (o.is_variable()) {
      if (vars) (*vars)[o.name] = element[o];
    } else {
      I.individuals[o.name] = element[o];
    }
  }
  const ValuePicker pick(completion);
  // collect bounds per atomic assertion
  std::map<Assertion, std::pair<std::vector<HalfBound>, std::vector<HalfBound>>> bounds;  // t lower, f upper
  for (const auto& c : completion.constraints()) {
    const auto& a = c.assertion;
    if (!a.is_role() && !a.expr.is_atomic()) continue;
    auto& [t_lower, f_upper] = bounds[a];
    if (c.truth_half().lower) t_lower.push_back(c.truth_half());
    if (!c.falsity_half().lower) f_upper.push_back(c.falsity_half());
  }
  for (const auto& [a, b] : bounds) {
    DegreePair v{pick.least_above(b.first), pick.greatest_below(b.second)};
    if (a.is_role()) I.roles[{a.role, element.at(a.subject), element.at(a.object)}] = v;
    else I.concepts[{a.expr.name(), element.at(a.subject)}] = v;
  }
  return I;
}

std::string format_trace(const ConstraintSet& s, const Clash* clash) {
  std::vector<const TraceStep*> origin(s.size(), nullptr);
  for (const auto& step : s.trace())
    for (std::size_t i : step.conclusions) origin[i] = &step;
  auto numbers = [](const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t x : xs) out += (out.empty() ? "" : ", ") + std::to_string(x + 1);
    return out;
  };
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << "(" << i + 1 << ") " << format_constraint(s[i]) << " — ";
    if (!origin[i]) os << "?";
    else if (origin[i]->premises.empty()) os << origin[i]->rule;
    else os << origin[i]->rule << " : " << numbers(origin[i]->premises);
    os << "\n";
  }
  if (clash) os << "clash — " << clash->reason << " : " << numbers(clash->constraints) << "\n";
  return os.str();
}

}  // namespace nalc
