#include "dlorder/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dlorder/error.hpp"

namespace dlorder {

namespace {

// Kleene truth values.
enum Truth : std::int8_t { False = 0, True = 1, Unknown = 2 };

Truth neg3(Truth a) { return a == Unknown ? Unknown : (a == True ? False : True); }

class Search {
 public:
  Search(const Ontology& o, const Concept& target) {
    std::vector<std::string> names;
    collectAtomicOccurrences(target, names);
    for (const auto& n : o.classes()) names.push_back(n);
    for (const auto& n : names) classes_.emplace(n, 0);
    std::size_t i = 0;
    for (auto& [n, idx] : classes_) idx = i++;
    i = 0;
    for (const auto& r : o.roles()) roles_.emplace(r, i++);
    collectRoles(target);
    for (const auto& ax : o.tbox()) {
      collectRoles(ax.lhs);
      collectRoles(ax.rhs);
      axioms_.push_back(&ax);
    }
    target_ = &target;
  }

  std::size_t classCount() const { return classes_.size(); }
  std::size_t roleCount() const { return roles_.size(); }

  bool satisfiable(std::size_t domain) {
    n_ = domain;
    classVars_ = classes_.size() * n_;
    vars_.assign(classVars_ + roles_.size() * n_ * n_, Unknown);
    return dfs(0);
  }

 private:
  void collectRoles(const Concept& c) {
    if (c.is(Concept::Kind::Some) || c.is(Concept::Kind::All)) {
      roles_.emplace(c.name(), roles_.size());
    }
    for (const auto& child : c.children()) collectRoles(child);
  }

  Truth classVar(const std::string& name, std::size_t x) const {
    return static_cast<Truth>(vars_[classes_.at(name) * n_ + x]);
  }

  Truth roleVar(const std::string& role, std::size_t x, std::size_t y) const {
    return static_cast<Truth>(vars_[classVars_ + (roles_.at(role) * n_ + x) * n_ + y]);
  }

  Truth eval(const Concept& c, std::size_t x) const {
    using K = Concept::Kind;
    switch (c.kind()) {
      case K::Top: return True;
      case K::Bottom: return False;
      case K::Atomic: return classVar(c.name(), x);
      case K::Not: return neg3(eval(c.child(), x));
      case K::And: {
        Truth acc = True;
        for (const auto& child : c.children()) {
          auto t = eval(child, x);
          if (t == False) return False;
          if (t == Unknown) acc = Unknown;
        }
        return acc;
      }
      case K::Or: {
        Truth acc = False;
        for (const auto& child : c.children()) {
          auto t = eval(child, x);
          if (t == True) return True;
          if (t == Unknown) acc = Unknown;
        }
        return acc;
      }
      case K::Some: {
        // ∃y: R(x,y) ∧ C(y)
        Truth acc = False;
        for (std::size_t y = 0; y < n_; ++y) {
          auto r = roleVar(c.name(), x, y);
          if (r == False) continue;
          auto t = eval(c.child(), y);
          if (t == False) continue;
          if (r == True && t == True) return True;
          acc = Unknown;
        }
        return acc;
      }
      case K::All: {
        // ∀y: R(x,y) → C(y)
        Truth acc = True;
        for (std::size_t y = 0; y < n_; ++y) {
          auto r = roleVar(c.name(), x, y);
          if (r == False) continue;
          auto t = eval(c.child(), y);
          if (t == True) continue;
          if (r == True && t == False) return False;
          acc = Unknown;
        }
        return acc;
      }
    }
    return Unknown;
  }

  Truth holds(const TBoxAxiom& ax, std::size_t x) const {
    auto l = eval(ax.lhs, x);
    auto r = eval(ax.rhs, x);
    auto implies = [](Truth a, Truth b) {
      if (a == False || b == True) return True;
      if (a == True && b == False) return False;
      return Unknown;
    };
    switch (ax.kind) {
      case TBoxAxiom::Kind::Subsumption:
        return implies(l, r);
      case TBoxAxiom::Kind::Equivalence: {
        auto a = implies(l, r), b = implies(r, l);
        if (a == False || b == False) return False;
        return a == True && b == True ? True : Unknown;
      }
      case TBoxAxiom::Kind::Disjointness:
        return implies(l, neg3(r));
    }
    return Unknown;
  }

  // Domain elements are interchangeable, so the target is pinned to element 0.
  Truth status() const {
    Truth acc = eval(*target_, 0);
    if (acc == False) return False;
    for (const auto* ax : axioms_) {
      for (std::size_t x = 0; x < n_; ++x) {
        auto t = holds(*ax, x);
        if (t == False) return False;
        if (t == Unknown) acc = Unknown;
      }
    }
    return acc;
  }

  bool dfs(std::size_t next) {
    auto s = status();
    if (s == False) return false;
    if (s == True) return true;
    if (next == vars_.size()) return false;
    for (std::int8_t value : {std::int8_t{1}, std::int8_t{0}}) {
      vars_[next] = value;
      if (dfs(next + 1)) return true;
    }
    vars_[next] = Unknown;
    return false;
  }

  std::map<std::string, std::size_t> classes_;
  std::map<std::string, std::size_t> roles_;
  std::vector<const TBoxAxiom*> axioms_;
  const Concept* target_ = nullptr;
  std::size_t n_ = 0;
  std::size_t classVars_ = 0;
  std::vector<std::int8_t> vars_;
};

}  // namespace

bool bruteForceSatisfiable(const Ontology& o, const Concept& target, std::size_t maxDomain,
                           const OracleLimits& limits) {
  Search search(o, target);
  if (search.classCount() > limits.maxClasses || search.roleCount() > limits.maxRoles ||
      maxDomain > limits.maxDomain || maxDomain == 0) {
    throw CapacityError("oracle search space too large: " + std::to_string(search.classCount()) +
                        " classes, " + std::to_string(search.roleCount()) + " roles, domain " +
                        std::to_string(maxDomain));
  }
  for (std::size_t n = 1; n <= maxDomain; ++n) {
    if (search.satisfiable(n)) return true;
  }
  return false;
}

}  // namespace dlorder
