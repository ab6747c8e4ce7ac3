#include "nalc/concept.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace nalc {

namespace {

using Key = std::tuple<ConceptKind, std::string, std::size_t, std::size_t>;

struct InternTable {
  std::mutex mu;
  std::map<Key, const ConceptNode*> index;
  std::deque<ConceptNode> nodes;  // stable addresses
};

InternTable& table() {
  static InternTable t;
  return t;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string render(ConceptKind k, const std::string& name, const ConceptNode* l, const ConceptNode* r) {
  switch (k) {
    case ConceptKind::Top: return "top";
    case ConceptKind::Bottom: return "bot";
    case ConceptKind::Atomic: return name;
    case ConceptKind::And: return "(and " + l->text + " " + r->text + ")";
    case ConceptKind::Or: return "(or " + l->text + " " + r->text + ")";
    case ConceptKind::Not: return "(not " + l->text + ")";
    case ConceptKind::Forall: return "(all " + name + " " + l->text + ")";
    case ConceptKind::Exists: return "(some " + name + " " + l->text + ")";
  }
  return {};
}

}  // namespace

Concept Concept::intern(ConceptKind k, const std::string& name, const ConceptNode* l, const ConceptNode* r) {
  auto& t = table();
  Key key{k, name, l ? l->id : kNone, r ? r->id : kNone};
  std::lock_guard lock(t.mu);
  if (auto it = t.index.find(key); it != t.index.end()) return Concept(it->second);
  ConceptNode& n = t.nodes.emplace_back(ConceptNode{k, name, Concept(l), Concept(r), t.nodes.size(), {}, 0, 1});
  n.text = render(k, name, l, r);
  if (l) n.depth = l->depth, n.size += l->size;
  if (r) n.depth = std::max(n.depth, r->depth), n.size += r->size;
  if (k == ConceptKind::Forall || k == ConceptKind::Exists) ++n.depth;
  t.index.emplace(std::move(key), &n);
  return Concept(&n);
}

Concept::Concept() : Concept(top()) {}

Concept Concept::top() { return intern(ConceptKind::Top, "", nullptr, nullptr); }
Concept Concept::bottom() { return intern(ConceptKind::Bottom, "", nullptr, nullptr); }

Concept Concept::atomic(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty concept name");
  return intern(ConceptKind::Atomic, name, nullptr, nullptr);
}

Concept Concept::conj(const Concept& l, const Concept& r) { return intern(ConceptKind::And, "", l.node_, r.node_); }
Concept Concept::disj(const Concept& l, const Concept& r) { return intern(ConceptKind::Or, "", l.node_, r.node_); }
Concept Concept::negation(const Concept& c) { return intern(ConceptKind::Not, "", c.node_, nullptr); }

Concept Concept::forall(const std::string& role, const Concept& filler) {
  if (role.empty()) throw std::invalid_argument("empty role name");
  return intern(ConceptKind::Forall, role, filler.node_, nullptr);
}

Concept Concept::exists(const std::string& role, const Concept& filler) {
  if (role.empty()) throw std::invalid_argument("empty role name");
  return intern(ConceptKind::Exists, role, filler.node_, nullptr);
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
std::size_t Concept::id() const { return node_->id; }
const std::string& Concept::text() const { return node_->text; }

const Concept& Concept::left() const {
  if (!node_->left.node_) throw std::logic_error("concept " + node_->text + " has no operand");
  return node_->left;
}

const Concept& Concept::right() const {
  if (!node_->right.node_) throw std::logic_error("concept " + node_->text + " has no second operand");
  return node_->right;
}

int Concept::depth() const { return node_->depth; }
int Concept::size() const { return node_->size; }

int quantifier_depth(const Concept& c) { return c.depth(); }
int concept_size(const Concept& c) { return c.size(); }

Concept nnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic: return c;
    case ConceptKind::And: return Concept::conj(nnf(c.left()), nnf(c.right()));
    case ConceptKind::Or: return Concept::disj(nnf(c.left()), nnf(c.right()));
    case ConceptKind::Forall: return Concept::forall(c.role(), nnf(c.filler()));
    case ConceptKind::Exists: return Concept::exists(c.role(), nnf(c.filler()));
    case ConceptKind::Not: break;
  }
  const Concept& d = c.inner();
  switch (d.kind()) {
    case ConceptKind::Top: return Concept::bottom();
    case ConceptKind::Bottom: return Concept::top();
    case ConceptKind::Atomic: return c;
    case ConceptKind::Not: return nnf(d.inner());
    case ConceptKind::And:
      return Concept::disj(nnf(Concept::negation(d.left())), nnf(Concept::negation(d.right())));
    case ConceptKind::Or:
      return Concept::conj(nnf(Concept::negation(d.left())), nnf(Concept::negation(d.right())));
    case ConceptKind::Forall: return Concept::exists(d.role(), nnf(Concept::negation(d.filler())));
    case ConceptKind::Exists: return Concept::forall(d.role(), nnf(Concept::negation(d.filler())));
  }
  return c;
}

namespace {

template <class F>
void walk(const Concept& c, F&& f) {
  f(c);
  switch (c.kind()) {
    case ConceptKind::And:
    case ConceptKind::Or:
      walk(c.left(), f);
      walk(c.right(), f);
      break;
    case ConceptKind::Not:
    case ConceptKind::Forall:
    case ConceptKind::Exists: walk(c.left(), f); break;
    default: break;
  }
}

}  // namespace

std::set<Concept> subconcepts(const Concept& c) {
  std::set<Concept> out;
  walk(c, [&](const Concept& d) { out.insert(d); });
  return out;
}

std::set<std::string> atomic_names(const Concept& c) {
  std::set<std::string> out;
  walk(c, [&](const Concept& d) {
    if (d.is_atomic()) out.insert(d.name());
  });
  return out;
}

std::set<std::string> role_names(const Concept& c) {
  std::set<std::string> out;
  walk(c, [&](const Concept& d) {
    if (d.kind() == ConceptKind::Forall || d.kind() == ConceptKind::Exists) out.insert(d.role());
  });
  return out;
}

Concept substitute(const Concept& c, const std::function<const Concept*(const std::string&)>& defs) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom: return c;
    case ConceptKind::Atomic: {
      const Concept* d = defs(c.name());
      return d ? *d : c;
    }
    case ConceptKind::And: return Concept::conj(substitute(c.left(), defs), substitute(c.right(), defs));
    case ConceptKind::Or: return Concept::disj(substitute(c.left(), defs), substitute(c.right(), defs));
    case ConceptKind::Not: return Concept::negation(substitute(c.inner(), defs));
    case ConceptKind::Forall: return Concept::forall(c.role(), substitute(c.filler(), defs));
    case ConceptKind::Exists: return Concept::exists(c.role(), substitute(c.filler(), defs));
  }
  return c;
}

}  // namespace nalc
