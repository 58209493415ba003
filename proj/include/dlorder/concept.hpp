#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dlorder {

// ALC concept expression tree.
//
// `name` holds the class name for Atomic and the role name for Some/All.
// And/Or always carry at least two children; the factories flatten nested
// operators of the same kind so `(and A (and B C))` becomes a single
// three-way conjunction.
class Concept {
 public:
  enum class Kind { Top, Bottom, Atomic, Not, And, Or, Some, All };

  static Concept top();
  static Concept bottom();
  static Concept atomic(std::string name);
  static Concept negation(Concept child);
  static Concept conjunction(std::vector<Concept> children);
  static Concept disjunction(std::vector<Concept> children);
  static Concept some(std::string role, Concept filler);
  static Concept all(std::string role, Concept filler);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Concept>& children() const { return children_; }
  // Sole child of Not/Some/All.
  const Concept& child() const { return children_.front(); }

  bool is(Kind k) const { return kind_ == k; }
  bool isAtomic() const { return kind_ == Kind::Atomic; }

  friend bool operator==(const Concept&, const Concept&) = default;

 private:
  Concept(Kind kind, std::string name, std::vector<Concept> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  Kind kind_ = Kind::Top;
  std::string name_;
  std::vector<Concept> children_;
};

// Names of classes, roles and individuals: non-empty over [A-Za-z0-9_-].
bool isValidName(std::string_view name);

// Pushes negation down to atomic concepts (De Morgan, quantifier duality,
// double negation). ¬⊤ becomes ⊥ and ¬⊥ becomes ⊤.
Concept negationNormalForm(const Concept& c);

// Node count of the expression tree; role names do not count separately.
std::size_t conceptSize(const Concept& c);

// Maximum number of Some/All nodes on any root-to-leaf path.
std::size_t conceptDepth(const Concept& c);

// True iff the top-level operator is Some. Expects NNF input.
bool isGenerating(const Concept& c);

// Appends every atomic name occurring in `c` (with multiplicity).
void collectAtomicOccurrences(const Concept& c, std::vector<std::string>& out);

}  // namespace dlorder
