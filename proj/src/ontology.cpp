#include "dlorder/ontology.hpp"

namespace dlorder {

void Ontology::declareNames(const Concept& c) {
  using K = Concept::Kind;
  if (c.is(K::Atomic)) classes_.insert(c.name());
  if (c.is(K::Some) || c.is(K::All)) roles_.insert(c.name());
  for (const auto& child : c.children()) declareNames(child);
}

void Ontology::add(TBoxAxiom axiom) {
  declareNames(axiom.lhs);
  declareNames(axiom.rhs);
  tbox_.push_back(std::move(axiom));
}

void Ontology::add(RBoxAxiom axiom) {
  roles_.insert(axiom.sub);
  if (axiom.kind == RBoxAxiom::Kind::RoleInclusion) roles_.insert(axiom.sup);
  rbox_.push_back(std::move(axiom));
}

void Ontology::add(ABoxAxiom axiom) {
  individuals_.insert(axiom.individual);
  if (axiom.kind == ABoxAxiom::Kind::ConceptAssertion) {
    declareNames(axiom.classExpr);
  } else {
    roles_.insert(axiom.role);
    individuals_.insert(axiom.target);
  }
  abox_.push_back(std::move(axiom));
}

namespace {

std::size_t countOccurrences(const Concept& c, std::string_view name) {
  if (c.isAtomic()) return c.name() == name ? 1 : 0;
  std::size_t n = 0;
  for (const auto& child : c.children()) n += countOccurrences(child, name);
  return n;
}

}  // namespace

std::size_t conceptFrequency(std::string_view name, const Ontology& o) {
  std::size_t n = 0;
  for (const auto& ax : o.tbox()) n += countOccurrences(ax.lhs, name) + countOccurrences(ax.rhs, name);
  for (const auto& ax : o.abox()) {
    if (ax.kind == ABoxAxiom::Kind::ConceptAssertion) n += countOccurrences(ax.classExpr, name);
  }
  return n;
}

}  // namespace dlorder
