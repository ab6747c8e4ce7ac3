#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace nalc {

enum class ConceptKind : std::uint8_t { Top, Bottom, Atomic, And, Or, Not, Forall, Exists };

struct ConceptNode;

// Immutable, hash-consed ALC concept. Structurally equal concepts share one
// node, so equality and ordering are O(1). Safe to share across threads.
class Concept {
 public:
  Concept();  // top

  static Concept top();
  static Concept bottom();
  static Concept atomic(const std::string& name);
  static Concept conj(const Concept& l, const Concept& r);
  static Concept disj(const Concept& l, const Concept& r);
  static Concept negation(const Concept& c);
  static Concept forall(const std::string& role, const Concept& filler);
  static Concept exists(const std::string& role, const Concept& filler);

  ConceptKind kind() const;
  // Atomic: concept name. Forall/Exists: role name. Otherwise empty.
  const std::string& name() const;
  const std::string& role() const { return name(); }
  // And/Or: left/right. Not: inner via left(). Forall/Exists: filler.
  const Concept& left() const;
  const Concept& right() const;
  const Concept& inner() const { return left(); }
  const Concept& filler() const { return left(); }

  bool is_atomic() const { return kind() == ConceptKind::Atomic; }
  std::size_t id() const;
  int depth() const;  // quantifier nesting
  int size() const;   // node count
  // S-expression text, identical to the parser's format_concept.
  const std::string& text() const;

  friend bool operator==(const Concept& a, const Concept& b) { return a.node_ == b.node_; }
  friend bool operator!=(const Concept& a, const Concept& b) { return a.node_ != b.node_; }
  // Creation order of the interned nodes; stable within a process.
  friend bool operator<(const Concept& a, const Concept& b) { return a.id() < b.id(); }

 private:
  explicit Concept(const ConceptNode* n) : node_(n) {}
  static Concept intern(ConceptKind k, const std::string& name, const ConceptNode* l, const ConceptNode* r);
  const ConceptNode* node_;
  friend struct ConceptNode;
};

struct ConceptNode {
  ConceptKind kind;
  std::string name;
  Concept left, right;
  std::size_t id;
  std::string text;
  int depth;  // quantifier nesting
  int size;
};

Concept nnf(const Concept& c);
std::set<Concept> subconcepts(const Concept& c);
int quantifier_depth(const Concept& c);
int concept_size(const Concept& c);
std::set<std::string> atomic_names(const Concept& c);
std::set<std::string> role_names(const Concept& c);
// Replace atomic names by concepts; names missing from `defs` are kept.
Concept substitute(const Concept& c, const std::function<const Concept*(const std::string&)>& defs);

}  // namespace nalc

template <>
struct std::hash<nalc::Concept> {
  std::size_t operator()(const nalc::Concept& c) const noexcept { return c.id(); }
};
