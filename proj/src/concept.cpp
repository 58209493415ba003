#include "dlorder/concept.hpp"

#include <algorithm>
#include <cassert>

namespace dlorder {

namespace {

std::vector<Concept> flatten(Concept::Kind kind, std::vector<Concept> children) {
  std::vector<Concept> flat;
  flat.reserve(children.size());
  for (auto& c : children) {
    if (c.kind() == kind) {
      for (const auto& grandchild : c.children()) flat.push_back(grandchild);
    } else {
      flat.push_back(std::move(c));
    }
  }
  return flat;
}

}  // namespace

Concept Concept::top() { return Concept(Kind::Top, {}, {}); }

Concept Concept::bottom() { return Concept(Kind::Bottom, {}, {}); }

Concept Concept::atomic(std::string name) {
  assert(isValidName(name));
  return Concept(Kind::Atomic, std::move(name), {});
}

Concept Concept::negation(Concept child) {
  std::vector<Concept> children;
  children.push_back(std::move(child));
  return Concept(Kind::Not, {}, std::move(children));
}

Concept Concept::conjunction(std::vector<Concept> children) {
  auto flat = flatten(Kind::And, std::move(children));
  assert(flat.size() >= 2);
  return Concept(Kind::And, {}, std::move(flat));
}

Concept Concept::disjunction(std::vector<Concept> children) {
  auto flat = flatten(Kind::Or, std::move(children));
  assert(flat.size() >= 2);
  return Concept(Kind::Or, {}, std::move(flat));
}

Concept Concept::some(std::string role, Concept filler) {
  std::vector<Concept> children;
  children.push_back(std::move(filler));
  return Concept(Kind::Some, std::move(role), std::move(children));
}

Concept Concept::all(std::string role, Concept filler) {
  std::vector<Concept> children;
  children.push_back(std::move(filler));
  return Concept(Kind::All, std::move(role), std::move(children));
}

bool isValidName(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
           ch == '_' || ch == '-';
  });
}

namespace {

Concept nnf(const Concept& c, bool negate) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
      return negate ? Concept::bottom() : Concept::top();
    case K::Bottom:
      return negate ? Concept::top() : Concept::bottom();
    case K::Atomic:
      return negate ? Concept::negation(c) : c;
    case K::Not:
      return nnf(c.child(), !negate);
    case K::And:
    case K::Or: {
      std::vector<Concept> children;
      children.reserve(c.children().size());
      for (const auto& child : c.children()) children.push_back(nnf(child, negate));
      bool conj = (c.kind() == K::And) != negate;
      return conj ? Concept::conjunction(std::move(children))
                  : Concept::disjunction(std::move(children));
    }
    case K::Some:
    case K::All: {
      bool universal = (c.kind() == K::All) != negate;
      auto filler = nnf(c.child(), negate);
      return universal ? Concept::all(c.name(), std::move(filler))
                       : Concept::some(c.name(), std::move(filler));
    }
  }
  return c;
}

}  // namespace

Concept negationNormalForm(const Concept& c) { return nnf(c, false); }

std::size_t conceptSize(const Concept& c) {
  std::size_t size = 1;
  for (const auto& child : c.children()) size += conceptSize(child);
  return size;
}

std::size_t conceptDepth(const Concept& c) {
  std::size_t deepest = 0;
  for (const auto& child : c.children()) deepest = std::max(deepest, conceptDepth(child));
  bool quantifier = c.is(Concept::Kind::Some) || c.is(Concept::Kind::All);
  return deepest + (quantifier ? 1 : 0);
}

bool isGenerating(const Concept& c) { return c.is(Concept::Kind::Some); }

void collectAtomicOccurrences(const Concept& c, std::vector<std::string>& out) {
  if (c.isAtomic()) {
    out.push_back(c.name());
    return;
  }
  for (const auto& child : c.children()) collectAtomicOccurrences(child, out);
}

}  // namespace dlorder
