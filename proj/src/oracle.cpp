#include "nalc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace nalc {

// ---- interpretations -------------------------------------------------------

DegreePair FiniteInterpretation::concept_value(const std::string& a, std::size_t d) const {
  auto it = concepts.find({a, d});
  return it == concepts.end() ? DegreePair{Degree::zero(), Degree::one()} : it->second;
}

DegreePair FiniteInterpretation::role_value(const std::string& r, std::size_t d, std::size_t e) const {
  auto it = roles.find({r, d, e});
  return it == roles.end() ? DegreePair{Degree::zero(), Degree::one()} : it->second;
}

std::size_t FiniteInterpretation::element_of(const Object& o, const VariableAssignment& vars) const {
  if (o.is_variable()) {
    auto it = vars.find(o.name);
    if (it == vars.end()) throw OracleError("unassigned variable " + o.name);
    if (it->second >= domain.size()) throw OracleError("variable " + o.name + " assigned outside the domain");
    return it->second;
  }
  auto it = individuals.find(o.name);
  if (it == individuals.end()) throw OracleError("unmapped individual " + o.name);
  return it->second;
}

bool FiniteInterpretation::injective() const {
  std::set<std::size_t> seen;
  for (const auto& [name, d] : individuals)
    if (!seen.insert(d).second) return false;
  return true;
}

std::string format_interpretation(const FiniteInterpretation& I) {
  std::ostringstream os;
  os << "domain:";
  for (std::size_t i = 0; i < I.domain.size(); ++i) os << " " << I.domain[i];
  os << "\n";
  for (const auto& [name, d] : I.individuals) os << "  " << name << " -> " << I.domain.at(d) << "\n";
  for (const auto& [key, v] : I.concepts)
    os << "  " << key.first << "(" << I.domain.at(key.second) << ") = <" << v.n << ", " << v.m << ">\n";
  for (const auto& [key, v] : I.roles)
    os << "  " << std::get<0>(key) << "(" << I.domain.at(std::get<1>(key)) << "," << I.domain.at(std::get<2>(key))
       << ") = <" << v.n << ", " << v.m << ">\n";
  return os.str();
}

DegreePair eval_concept(const FiniteInterpretation& I, const Concept& c, std::size_t d) {
  if (d >= I.domain.size()) throw OracleError("unknown element " + std::to_string(d));
  const Degree zero = Degree::zero(), one = Degree::one();
  switch (c.kind()) {
    case ConceptKind::Top: return {one, zero};
    case ConceptKind::Bottom: return {zero, one};
    case ConceptKind::Atomic: return I.concept_value(c.name(), d);
    case ConceptKind::And: {
      auto l = eval_concept(I, c.left(), d), r = eval_concept(I, c.right(), d);
      return {std::min(l.n, r.n), std::max(l.m, r.m)};
    }
    case ConceptKind::Or: {
      auto l = eval_concept(I, c.left(), d), r = eval_concept(I, c.right(), d);
      return {std::max(l.n, r.n), std::min(l.m, r.m)};
    }
    case ConceptKind::Not: {
      auto v = eval_concept(I, c.inner(), d);
      return {v.m, v.n};
    }
    case ConceptKind::Forall: {
      DegreePair out{one, zero};  // inf of t, sup of f
      for (std::size_t e = 0; e < I.domain.size(); ++e) {
        auto r = I.role_value(c.role(), d, e);
        auto v = eval_concept(I, c.filler(), e);
        out.n = std::min(out.n, std::max(r.m, v.n));
        out.m = std::max(out.m, std::min(r.n, v.m));
      }
      return out;
    }
    case ConceptKind::Exists: {
      DegreePair out{zero, one};
      for (std::size_t e = 0; e < I.domain.size(); ++e) {
        auto r = I.role_value(c.role(), d, e);
        auto v = eval_concept(I, c.filler(), e);
        out.n = std::max(out.n, std::min(r.n, v.n));
        out.m = std::min(out.m, std::max(r.m, v.m));
      }
      return out;
    }
  }
  return {zero, one};
}

DegreePair eval_assertion(const FiniteInterpretation& I, const Assertion& a, const VariableAssignment& vars) {
  std::size_t d = I.element_of(a.subject, vars);
  if (a.is_role()) return I.role_value(a.role, d, I.element_of(a.object, vars));
  return eval_concept(I, a.expr, d);
}

bool satisfies(const FiniteInterpretation& I, const NeutrosophicConstraint& c, const VariableAssignment& vars) {
  return c.holds(eval_assertion(I, c.assertion, vars));
}

bool satisfies(const FiniteInterpretation& I, const NeutrosophicAssertion& a, const VariableAssignment& vars) {
  auto v = eval_assertion(I, a.assertion, vars);
  if (a.sign == NeutrosophicAssertion::Sign::GeqLeq) return v.n >= a.bounds.n && v.m <= a.bounds.m;
  return v.n <= a.bounds.n && v.m >= a.bounds.m;
}

bool satisfies_axiom(const FiniteInterpretation& I, const TerminologicalAxiom& ax) {
  const Concept lhs = Concept::atomic(ax.lhs);
  for (std::size_t d = 0; d < I.domain.size(); ++d) {
    auto a = eval_concept(I, lhs, d), c = eval_concept(I, ax.rhs, d);
    if (ax.kind == TerminologicalAxiom::Kind::Definition) {
      if (!(a == c)) return false;
    } else if (a.n > c.n || a.m < c.m) {
      return false;
    }
  }
  return true;
}

bool satisfies(const FiniteInterpretation& I, const KnowledgeBase& kb) {
  for (const auto& a : kb.assertions)
    if (!satisfies(I, a)) return false;
  for (const auto& ax : kb.terminology)
    if (!satisfies_axiom(I, ax)) return false;
  return true;
}

// ---- grids ---------------------------------------------------------------------

DegreeGrid DegreeGrid::of(std::vector<Degree> degrees) {
  degrees.push_back(Degree::zero());
  degrees.push_back(Degree::one());
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  degrees.erase(std::remove_if(degrees.begin(), degrees.end(), [](const Degree& d) { return !d.in_unit_interval(); }),
                degrees.end());
  return {std::move(degrees)};
}

DegreeGrid DegreeGrid::uniform(int k) {
  std::vector<Degree> v;
  for (int i = 0; i <= k; ++i) v.emplace_back(i, k);
  return of(std::move(v));
}

DegreeGrid DegreeGrid::with_midpoints() const {
  std::vector<Degree> v = values;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) v.push_back(Degree::midpoint(values[i], values[i + 1]));
  return of(std::move(v));
}

DegreeGrid DegreeGrid::symmetric() const {
  std::vector<Degree> v = values;
  for (const auto& d : values) v.push_back(d.complement());
  return of(std::move(v));
}

bool DegreeGrid::contains(const Degree& d) const { return std::binary_search(values.begin(), values.end(), d); }

// ---- search engine -------------------------------------------------------------

namespace {

// Bounds propagation over a DAG of min/max/complement nodes whose values are
// grid indices, with trail-based backtracking over the leaves.
class Engine {
 public:
  enum class Op : std::uint8_t { Leaf, Const, Min, Max, Neg };

  explicit Engine(int grid_size) : top_(grid_size - 1) {}

  int leaf() {
    int n = add(Op::Leaf, {});
    leaves_.push_back(n);
    return n;
  }

  int constant(int v) {
    auto [it, fresh] = consts_.emplace(v, -1);
    if (fresh) {
      it->second = add(Op::Const, {});
      lo_[it->second] = hi_[it->second] = v;
    }
    return it->second;
  }

  int combine(Op op, std::vector<int> kids) {
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    if (kids.size() == 1) return kids.front();
    auto key = std::make_pair(op, kids);
    if (auto it = shared_.find(key); it != shared_.end()) return it->second;
    int n = add(op, kids);
    shared_.emplace(std::move(key), n);
    return n;
  }

  int neg(int k) {
    auto key = std::make_pair(Op::Neg, std::vector<int>{k});
    if (auto it = shared_.find(key); it != shared_.end()) return it->second;
    int n = add(Op::Neg, {k});
    shared_.emplace(std::move(key), n);
    return n;
  }

  // value(n) ≥ v / ≤ v; v may fall outside the grid (then the problem is infeasible)
  void require_at_least(int n, int v) { initial_.push_back({n, v, top_ + 1}); }
  void require_at_most(int n, int v) { initial_.push_back({n, -1, v}); }
  // value(a) ≤ value(b)
  void relate(int a, int b) {
    above_[a].push_back(b);
    below_[b].push_back(a);
  }

  bool solve(std::uint64_t budget, std::uint64_t& visited) {
    for (const auto& r : initial_)
      if (!tighten(r.node, std::max(r.lo, 0), std::min(r.hi, top_)) || r.lo > top_ || r.hi < 0) return false;
    for (int n = 0; n < static_cast<int>(ops_.size()); ++n) enqueue(n);
    if (!propagate()) return false;
    budget_ = budget;
    visited_ = &visited;
    return search();
  }

  int value(int n) const { return lo_[n]; }

 private:
  struct Requirement {
    int node, lo, hi;
  };
  struct Saved {
    int node, lo, hi;
  };

  int add(Op op, std::vector<int> kids) {
    int n = static_cast<int>(ops_.size());
    for (int k : kids) parents_[k].push_back(n);
    ops_.push_back(op);
    kids_.push_back(std::move(kids));
    parents_.emplace_back();
    above_.emplace_back();
    below_.emplace_back();
    lo_.push_back(0);
    hi_.push_back(top_);
    queued_.push_back(false);
    return n;
  }

  void enqueue(int n) {
    if (!queued_[n]) {
      queued_[n] = true;
      queue_.push_back(n);
    }
  }

  bool tighten(int n, int lo, int hi) {
    if (lo <= lo_[n] && hi >= hi_[n]) return true;
    trail_.push_back({n, lo_[n], hi_[n]});
    lo_[n] = std::max(lo_[n], lo);
    hi_[n] = std::min(hi_[n], hi);
    if (lo_[n] > hi_[n]) return false;
    enqueue(n);
    for (int p : parents_[n]) enqueue(p);
    for (int b : above_[n]) enqueue(b);
    for (int a : below_[n]) enqueue(a);
    return true;
  }

  bool process(int n) {
    const auto& kids = kids_[n];
    switch (ops_[n]) {
      case Op::Leaf:
      case Op::Const: break;
      case Op::Min:
      case Op::Max: {
        const bool is_min = ops_[n] == Op::Min;
        int lo = is_min ? top_ : 0, hi = is_min ? top_ : 0;
        for (int k : kids) {
          lo = is_min ? std::min(lo, lo_[k]) : std::max(lo, lo_[k]);
          hi = is_min ? std::min(hi, hi_[k]) : std::max(hi, hi_[k]);
        }
        if (!tighten(n, lo, hi)) return false;
        // every operand sits above a min (below a max); one operand must reach it
        int support = -1, count = 0;
        for (int k : kids) {
          if (is_min ? !tighten(k, lo_[n], top_) : !tighten(k, 0, hi_[n])) return false;
          if (is_min ? lo_[k] <= hi_[n] : hi_[k] >= lo_[n]) support = k, ++count;
        }
        if (count == 0) return false;
        if (count == 1 && !(is_min ? tighten(support, 0, hi_[n]) : tighten(support, lo_[n], top_))) return false;
        break;
      }
      case Op::Neg: {
        int k = kids.front();
        if (!tighten(n, top_ - hi_[k], top_ - lo_[k])) return false;
        if (!tighten(k, top_ - hi_[n], top_ - lo_[n])) return false;
        break;
      }
    }
    for (int b : above_[n])
      if (!tighten(b, lo_[n], top_) || !tighten(n, 0, hi_[b])) return false;
    for (int a : below_[n])
      if (!tighten(a, 0, hi_[n]) || !tighten(n, lo_[a], top_)) return false;
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      int n = queue_.back();
      queue_.pop_back();
      queued_[n] = false;
      if (!process(n)) {
        for (int q : queue_) queued_[q] = false;
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto& s = trail_.back();
      lo_[s.node] = s.lo;
      hi_[s.node] = s.hi;
      trail_.pop_back();
    }
  }

  // Bounds implied by the leaves alone (no requirement pushed down); nodes are
  // created after their operands, so one forward pass suffices.
  void natural_bounds() {
    const int count = static_cast<int>(ops_.size());
    nlo_.resize(count);
    nhi_.resize(count);
    for (int n = 0; n < count; ++n) {
      switch (ops_[n]) {
        case Op::Leaf:
        case Op::Const: nlo_[n] = lo_[n], nhi_[n] = hi_[n]; break;
        case Op::Neg: nlo_[n] = top_ - nhi_[kids_[n][0]], nhi_[n] = top_ - nlo_[kids_[n][0]]; break;
        case Op::Min:
        case Op::Max: {
          const bool is_min = ops_[n] == Op::Min;
          int lo = is_min ? top_ : 0, hi = lo;
          for (int k : kids_[n]) {
            lo = is_min ? std::min(lo, nlo_[k]) : std::max(lo, nlo_[k]);
            hi = is_min ? std::min(hi, nhi_[k]) : std::max(hi, nhi_[k]);
          }
          nlo_[n] = lo, nhi_[n] = hi;
        }
      }
    }
  }

  // undecided leaves below n (stamped to skip shared nodes)
  void open_leaves(int n, std::vector<int>& out) {
    if (nlo_[n] == nhi_[n] || seen_[n] == stamp_) return;
    seen_[n] = stamp_;
    if (ops_[n] == Op::Leaf) out.push_back(n);
    for (int k : kids_[n]) open_leaves(k, out);
  }

  // first-fail: a leaf of the open requirement with the fewest undecided leaves
  // (ties go to the later requirement); -1 when every requirement is entailed
  int branch_leaf() {
    natural_bounds();
    seen_.resize(ops_.size(), 0);
    std::vector<int> best, cur;
    auto consider = [&](std::initializer_list<int> roots) {
      ++stamp_;
      cur.clear();
      for (int r : roots) open_leaves(r, cur);
      if (!cur.empty() && (best.empty() || cur.size() <= best.size())) best.swap(cur);
    };
    for (const auto& r : initial_)
      if (nlo_[r.node] < r.lo || nhi_[r.node] > r.hi) consider({r.node});
    for (int a = 0; a < static_cast<int>(above_.size()); ++a)
      for (int b : above_[a])
        if (nhi_[a] > nlo_[b]) consider({a, b});
    return best.empty() ? -1 : best.front();
  }

  bool search() {
    if (++*visited_ > budget_) throw ResourceLimit("model search exceeded its budget", *visited_);
    const int pick = branch_leaf();
    if (pick < 0) {
      // every requirement holds for any completion: fix the remaining leaves
      for (int l : leaves_)
        if (lo_[l] < hi_[l]) tighten(l, lo_[l], lo_[l]);
      queue_.clear();
      std::fill(queued_.begin(), queued_.end(), false);
      return true;
    }
    const int lo = lo_[pick], hi = hi_[pick], mid = lo + (hi - lo) / 2;
    for (auto [a, b] : {std::pair{lo, mid}, std::pair{mid + 1, hi}}) {
      std::size_t mark = trail_.size();
      if (tighten(pick, a, b) && propagate() && search()) return true;
      undo(mark);
    }
    return false;
  }

  int top_;
  std::vector<Op> ops_;
  std::vector<std::vector<int>> kids_, parents_, above_, below_;
  std::vector<int> lo_, hi_, nlo_, nhi_, leaves_, queue_;
  std::vector<bool> queued_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<Saved> trail_;
  std::vector<Requirement> initial_;
  std::map<int, int> consts_;
  std::map<std::pair<Op, std::vector<int>>, int> shared_;
  std::uint64_t budget_ = 0;
  std::uint64_t* visited_ = nullptr;
};

int index_at_least(const std::vector<Degree>& grid, const Degree& v, bool strict) {
  auto it = strict ? std::upper_bound(grid.begin(), grid.end(), v) : std::lower_bound(grid.begin(), grid.end(), v);
  return static_cast<int>(it - grid.begin());
}

int index_at_most(const std::vector<Degree>& grid, const Degree& v, bool strict) {
  auto it = strict ? std::lower_bound(grid.begin(), grid.end(), v) : std::upper_bound(grid.begin(), grid.end(), v);
  return static_cast<int>(it - grid.begin()) - 1;
}

void require(Engine& eng, const std::vector<Degree>& grid, int node, const HalfBound& h) {
  if (h.lower) eng.require_at_least(node, index_at_least(grid, h.value, h.strict));
  else eng.require_at_most(node, index_at_most(grid, h.value, h.strict));
}

// Ground semantic DAG for one interpretation schema. comp 0 = truth, 1 = falsity;
// in fuzzy mode only comp 0 is used and negation is the grid complement.
class Grounding {
 public:
  Grounding(Engine& eng, int domain_size, int grid_size, bool fuzzy)
      : eng_(eng), n_(domain_size), top_(grid_size - 1), fuzzy_(fuzzy) {}

  int concept_leaf(const std::string& a, int d, int comp) {
    auto [it, fresh] = concept_leaves_.emplace(std::make_tuple(a, d, comp), -1);
    if (fresh) it->second = eng_.leaf();
    return it->second;
  }

  int role_leaf(const std::string& r, int d, int e, int comp) {
    auto [it, fresh] = role_leaves_.emplace(std::make_tuple(r, d, e, comp), -1);
    if (fresh) it->second = eng_.leaf();
    return it->second;
  }

  int node(const Concept& c, int d, int comp) {
    auto key = std::make_tuple(c.id(), d, comp);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int out = build(c, d, comp);
    memo_.emplace(key, out);
    return out;
  }

  const auto& concept_leaves() const { return concept_leaves_; }
  const auto& role_leaves() const { return role_leaves_; }

 private:
  using Op = Engine::Op;

  int build(const Concept& c, int d, int comp) {
    const bool t = comp == 0;
    switch (c.kind()) {
      case ConceptKind::Top: return eng_.constant(t ? top_ : 0);
      case ConceptKind::Bottom: return eng_.constant(t ? 0 : top_);
      case ConceptKind::Atomic: return concept_leaf(c.name(), d, comp);
      case ConceptKind::And:
        return eng_.combine(t ? Op::Min : Op::Max, {node(c.left(), d, comp), node(c.right(), d, comp)});
      case ConceptKind::Or:
        return eng_.combine(t ? Op::Max : Op::Min, {node(c.left(), d, comp), node(c.right(), d, comp)});
      case ConceptKind::Not:
        if (fuzzy_) return eng_.neg(node(c.inner(), d, 0));
        return node(c.inner(), d, 1 - comp);
      case ConceptKind::Forall:
      case ConceptKind::Exists: {
        const bool all = c.kind() == ConceptKind::Forall;
        std::vector<int> terms;
        for (int e = 0; e < n_; ++e) {
          int inner = node(c.filler(), e, comp);
          int r;
          if (fuzzy_) r = all ? eng_.neg(role_leaf(c.role(), d, e, 0)) : role_leaf(c.role(), d, e, 0);
          // ∀: t pairs R^f with C^t, f pairs R^t with C^f; ∃: same component
          else r = role_leaf(c.role(), d, e, all ? 1 - comp : comp);
          // ∀ t / ∃ f: max inside, min outside; ∀ f / ∃ t: the reverse
          const bool outer_min = all == t;
          terms.push_back(eng_.combine(outer_min ? Op::Max : Op::Min, {r, inner}));
        }
        const bool outer_min = all == t;
        return eng_.combine(outer_min ? Op::Min : Op::Max, std::move(terms));
      }
    }
    return eng_.constant(0);
  }

  Engine& eng_;
  int n_, top_;
  bool fuzzy_;
  std::map<std::tuple<std::string, int, int>, int> concept_leaves_;
  std::map<std::tuple<std::string, int, int, int>, int> role_leaves_;
  std::map<std::tuple<std::size_t, int, int>, int> memo_;
};

struct ObjectLayout {
  std::vector<std::string> individuals;  // element i
  std::vector<std::string> variables;
};

template <class Range, class Get>
ObjectLayout layout_of(const Range& items, Get&& assertion_of) {
  ObjectLayout out;
  std::set<std::string> ind, var;
  auto visit = [&](const Object& o) {
    auto& seen = o.is_variable() ? var : ind;
    auto& list = o.is_variable() ? out.variables : out.individuals;
    if (seen.insert(o.name).second) list.push_back(o.name);
  };
  for (const auto& item : items) {
    const Assertion& a = assertion_of(item);
    visit(a.subject);
    if (a.is_role()) visit(a.object);
  }
  return out;
}

std::vector<std::string> element_labels(const ObjectLayout& layout, int domain_size) {
  std::vector<std::string> labels(layout.individuals);
  for (int i = static_cast<int>(labels.size()); i < domain_size; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

// Calls body(assignment) for each map of the variables into the domain until it returns true.
template <class F>
bool for_each_assignment(const std::vector<std::string>& vars, int domain_size, F&& body) {
  std::vector<int> idx(vars.size(), 0);
  while (true) {
    VariableAssignment va;
    for (std::size_t i = 0; i < vars.size(); ++i) va[vars[i]] = idx[i];
    if (body(va)) return true;
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < domain_size) break;
      idx[i] = 0;
    }
    if (i == idx.size()) return false;
  }
}

int element_for(const Object& o, const ObjectLayout& layout, const VariableAssignment& va) {
  if (o.is_variable()) return static_cast<int>(va.at(o.name));
  return static_cast<int>(std::find(layout.individuals.begin(), layout.individuals.end(), o.name) -
                          layout.individuals.begin());
}

void add_axioms(Grounding& g, Engine& eng, const std::vector<TerminologicalAxiom>& terminology, int domain_size,
                bool fuzzy) {
  for (const auto& ax : terminology) {
    const Concept lhs = Concept::atomic(ax.lhs);
    const bool def = ax.kind == TerminologicalAxiom::Kind::Definition;
    for (int d = 0; d < domain_size; ++d) {
      for (int comp = 0; comp < (fuzzy ? 1 : 2); ++comp) {
        int a = g.node(lhs, d, comp), c = g.node(ax.rhs, d, comp);
        // t: A ≤ C;  f: C ≤ A
        if (comp == 0 || def) eng.relate(a, c);
        if (comp == 1 || def) eng.relate(c, a);
      }
    }
  }
}

}  // namespace

std::optional<FiniteInterpretation> exists_model(const std::vector<NeutrosophicConstraint>& constraints,
                                                 const std::vector<TerminologicalAxiom>& terminology, int domain_size,
                                                 const DegreeGrid& grid, const OracleLimits& limits,
                                                 VariableAssignment* assignment) {
  const auto layout = layout_of(constraints, [](const NeutrosophicConstraint& c) -> const Assertion& {
    return c.assertion;
  });
  if (static_cast<int>(layout.individuals.size()) > domain_size || domain_size < 1)
    throw OracleError("domain of size " + std::to_string(domain_size) + " cannot hold " +
                      std::to_string(layout.individuals.size()) + " individuals");
  const auto& values = grid.values;
  const int gsize = static_cast<int>(values.size());
  std::uint64_t visited = 0;
  std::optional<FiniteInterpretation> found;

  for_each_assignment(layout.variables, domain_size, [&](const VariableAssignment& va) {
    Engine eng(gsize);
    Grounding g(eng, domain_size, gsize, false);
    for (const auto& c : constraints) {
      const auto& a = c.assertion;
      int d = element_for(a.subject, layout, va);
      int nt, nf;
      if (a.is_role()) {
        int e = element_for(a.object, layout, va);
        nt = g.role_leaf(a.role, d, e, 0);
        nf = g.role_leaf(a.role, d, e, 1);
      } else {
        nt = g.node(a.expr, d, 0);
        nf = g.node(a.expr, d, 1);
      }
      require(eng, values, nt, c.truth_half());
      require(eng, values, nf, c.falsity_half());
    }
    add_axioms(g, eng, terminology, domain_size, false);
    if (!eng.solve(limits.max_search_nodes, visited)) return false;

    FiniteInterpretation I;
    I.domain = element_labels(layout, domain_size);
    for (std::size_t i = 0; i < layout.individuals.size(); ++i) I.individuals[layout.individuals[i]] = i;
    for (const auto& [key, n] : g.concept_leaves()) {
      auto [name, d, comp] = key;
      auto [it, fresh] = I.concepts.try_emplace({name, d}, DegreePair{Degree::zero(), Degree::one()});
      (comp == 0 ? it->second.n : it->second.m) = values[eng.value(n)];
    }
    for (const auto& [key, n] : g.role_leaves()) {
      auto [name, d, e, comp] = key;
      auto [it, fresh] = I.roles.try_emplace({name, d, e}, DegreePair{Degree::zero(), Degree::one()});
      (comp == 0 ? it->second.n : it->second.m) = values[eng.value(n)];
    }
    // the search is only trusted together with a direct semantic check
    for (const auto& c : constraints)
      if (!satisfies(I, c, va)) throw std::logic_error("model search produced a non-model for " + format_constraint(c));
    for (const auto& ax : terminology)
      if (!satisfies_axiom(I, ax)) throw std::logic_error("model search violated an axiom on " + ax.lhs);
    found = std::move(I);
    if (assignment) *assignment = va;
    return true;
  });
  return found;
}

namespace {

std::set<std::string> individuals_of(const std::vector<Assertion>& as) {
  std::set<std::string> out;
  for (const auto& a : as) {
    out.insert(a.subject.name);
    if (a.is_role()) out.insert(a.object.name);
  }
  return out;
}

int max_depth(const std::vector<Assertion>& as, const std::vector<TerminologicalAxiom>& terminology) {
  KnowledgeBase t;
  t.terminology = terminology;
  int depth = 0;
  for (const auto& a : as)
    if (!a.is_role()) depth = std::max(depth, quantifier_depth(unfold(t, a.expr)));
  return depth;
}

}  // namespace

OracleParameters default_oracle_parameters(const KnowledgeBase& kb, const NeutrosophicAssertion& query) {
  std::vector<Assertion> as{query.assertion};
  std::vector<Degree> degrees{query.bounds.n, query.bounds.m};
  for (const auto& a : kb.assertions) {
    as.push_back(a.assertion);
    degrees.push_back(a.bounds.n);
    degrees.push_back(a.bounds.m);
  }
  OracleParameters p;
  p.domain_size = static_cast<int>(individuals_of(as).size()) + max_depth(as, kb.terminology);
  p.grid = DegreeGrid::of(degrees).with_midpoints();
  return p;
}

bool oracle_satisfiable(const KnowledgeBase& kb, int domain_size, const DegreeGrid& grid, const OracleLimits& limits) {
  std::vector<NeutrosophicConstraint> cs;
  for (const auto& a : kb.assertions) cs.push_back(NeutrosophicConstraint::from(a));
  return exists_model(cs, kb.terminology, domain_size, grid, limits).has_value();
}

bool oracle_entails(const KnowledgeBase& kb, const NeutrosophicAssertion& query, int domain_size,
                    const DegreeGrid& grid, const OracleLimits& limits) {
  std::vector<NeutrosophicConstraint> base;
  for (const auto& a : kb.assertions) base.push_back(NeutrosophicConstraint::from(a));
  for (const auto& r : refutations(query)) {
    auto cs = base;
    cs.push_back(r);
    if (exists_model(cs, kb.terminology, domain_size, grid, limits)) return false;
  }
  return true;
}

bool oracle_entails(const KnowledgeBase& kb, const NeutrosophicAssertion& query, const OracleLimits& limits) {
  auto p = default_oracle_parameters(kb, query);
  return oracle_entails(kb, query, p.domain_size, p.grid, limits);
}

// ---- fuzzy -----------------------------------------------------------------------

Degree eval_fuzzy(const FuzzyInterpretation& I, const Concept& c, std::size_t d) {
  if (d >= I.domain.size()) throw OracleError("unknown element " + std::to_string(d));
  auto role = [&](std::size_t e) {
    auto it = I.roles.find({c.role(), d, e});
    return it == I.roles.end() ? Degree::zero() : it->second;
  };
  switch (c.kind()) {
    case ConceptKind::Top: return Degree::one();
    case ConceptKind::Bottom: return Degree::zero();
    case ConceptKind::Atomic: {
      auto it = I.concepts.find({c.name(), d});
      return it == I.concepts.end() ? Degree::zero() : it->second;
    }
    case ConceptKind::And: return std::min(eval_fuzzy(I, c.left(), d), eval_fuzzy(I, c.right(), d));
    case ConceptKind::Or: return std::max(eval_fuzzy(I, c.left(), d), eval_fuzzy(I, c.right(), d));
    case ConceptKind::Not: return eval_fuzzy(I, c.inner(), d).complement();
    case ConceptKind::Forall: {
      Degree out = Degree::one();
      for (std::size_t e = 0; e < I.domain.size(); ++e)
        out = std::min(out, std::max(role(e).complement(), eval_fuzzy(I, c.filler(), e)));
      return out;
    }
    case ConceptKind::Exists: {
      Degree out = Degree::zero();
      for (std::size_t e = 0; e < I.domain.size(); ++e)
        out = std::max(out, std::min(role(e), eval_fuzzy(I, c.filler(), e)));
      return out;
    }
  }
  return Degree::zero();
}

namespace {

Degree fuzzy_value(const FuzzyInterpretation& I, const Assertion& a) {
  auto el = [&](const Object& o) {
    auto it = I.individuals.find(o.name);
    if (o.is_variable() || it == I.individuals.end()) throw OracleError("unmapped object " + o.name);
    return it->second;
  };
  if (a.is_role()) {
    auto it = I.roles.find({a.role, el(a.subject), el(a.object)});
    return it == I.roles.end() ? Degree::zero() : it->second;
  }
  return eval_fuzzy(I, a.expr, el(a.subject));
}

struct FuzzyConstraint {
  Assertion assertion;
  HalfBound bound;
};

HalfBound half_of(const FuzzyAssertion& a) {
  return {a.relation == FuzzyAssertion::Relation::Geq, a.degree, false};
}

std::optional<FuzzyInterpretation> fuzzy_model(const std::vector<FuzzyConstraint>& constraints,
                                               const std::vector<TerminologicalAxiom>& terminology, int domain_size,
                                               const DegreeGrid& raw_grid, const OracleLimits& limits) {
  const auto layout = layout_of(constraints, [](const FuzzyConstraint& c) -> const Assertion& { return c.assertion; });
  if (!layout.variables.empty()) throw OracleError("fuzzy model search takes individuals only");
  if (static_cast<int>(layout.individuals.size()) > domain_size || domain_size < 1)
    throw OracleError("domain too small for the individuals");
  const DegreeGrid grid = raw_grid.symmetric().with_midpoints();
  const auto& values = grid.values;
  const int gsize = static_cast<int>(values.size());
  Engine eng(gsize);
  Grounding g(eng, domain_size, gsize, true);
  const VariableAssignment none;
  for (const auto& c : constraints) {
    int d = element_for(c.assertion.subject, layout, none);
    int node = c.assertion.is_role() ? g.role_leaf(c.assertion.role, d, element_for(c.assertion.object, layout, none), 0)
                                     : g.node(c.assertion.expr, d, 0);
    require(eng, values, node, c.bound);
  }
  add_axioms(g, eng, terminology, domain_size, true);
  std::uint64_t visited = 0;
  if (!eng.solve(limits.max_search_nodes, visited)) return std::nullopt;
  FuzzyInterpretation I;
  I.domain = element_labels(layout, domain_size);
  for (std::size_t i = 0; i < layout.individuals.size(); ++i) I.individuals[layout.individuals[i]] = i;
  for (const auto& [key, n] : g.concept_leaves()) I.concepts[{std::get<0>(key), std::get<1>(key)}] = values[eng.value(n)];
  for (const auto& [key, n] : g.role_leaves())
    I.roles[{std::get<0>(key), std::get<1>(key), std::get<2>(key)}] = values[eng.value(n)];
  for (const auto& c : constraints)
    if (!c.bound.holds(fuzzy_value(I, c.assertion))) throw std::logic_error("fuzzy model search produced a non-model");
  for (const auto& ax : terminology)
    if (!satisfies_axiom(I, ax)) throw std::logic_error("fuzzy model search violated an axiom");
  return I;
}

}  // namespace

bool satisfies(const FuzzyInterpretation& I, const FuzzyAssertion& a) {
  return half_of(a).holds(fuzzy_value(I, a.assertion));
}

bool satisfies_axiom(const FuzzyInterpretation& I, const TerminologicalAxiom& ax) {
  const Concept lhs = Concept::atomic(ax.lhs);
  for (std::size_t d = 0; d < I.domain.size(); ++d) {
    Degree a = eval_fuzzy(I, lhs, d), c = eval_fuzzy(I, ax.rhs, d);
    if (ax.kind == TerminologicalAxiom::Kind::Definition ? a != c : a > c) return false;
  }
  return true;
}

bool fuzzy_satisfiable(const FuzzyKnowledgeBase& fkb, int domain_size, const DegreeGrid& grid,
                       const OracleLimits& limits) {
  std::vector<FuzzyConstraint> cs;
  for (const auto& a : fkb.assertions) cs.push_back({a.assertion, half_of(a)});
  return fuzzy_model(cs, fkb.terminology, domain_size, grid, limits).has_value();
}

bool fuzzy_entails(const FuzzyKnowledgeBase& fkb, const FuzzyAssertion& query, int domain_size,
                   const DegreeGrid& grid, const OracleLimits& limits) {
  std::vector<FuzzyConstraint> cs;
  for (const auto& a : fkb.assertions) cs.push_back({a.assertion, half_of(a)});
  HalfBound q = half_of(query);
  cs.push_back({query.assertion, {!q.lower, q.value, true}});
  return !fuzzy_model(cs, fkb.terminology, domain_size, grid, limits).has_value();
}

bool fuzzy_entails(const FuzzyKnowledgeBase& fkb, const FuzzyAssertion& query, const OracleLimits& limits) {
  std::vector<Assertion> as{query.assertion};
  std::vector<Degree> degrees{query.degree};
  for (const auto& a : fkb.assertions) {
    as.push_back(a.assertion);
    degrees.push_back(a.degree);
  }
  int domain = static_cast<int>(individuals_of(as).size()) + max_depth(as, fkb.terminology);
  return fuzzy_entails(fkb, query, domain, DegreeGrid::of(degrees), limits);
}

}  // namespace nalc
