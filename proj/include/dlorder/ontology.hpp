#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dlorder/concept.hpp"

namespace dlorder {

struct TBoxAxiom {
  enum class Kind { Subsumption, Equivalence, Disjointness };
  Kind kind;
  Concept lhs;
  Concept rhs;

  friend bool operator==(const TBoxAxiom&, const TBoxAxiom&) = default;
};

struct RBoxAxiom {
  enum class Kind { RoleInclusion, Transitivity };
  Kind kind;
  std::string sub;  // the role itself for Transitivity
  std::string sup;  // empty for Transitivity

  friend bool operator==(const RBoxAxiom&, const RBoxAxiom&) = default;
};

struct ABoxAxiom {
  enum class Kind { ConceptAssertion, RoleAssertion };
  Kind kind = Kind::ConceptAssertion;
  std::string individual;
  Concept classExpr = Concept::top();  // ConceptAssertion only
  std::string role;                    // RoleAssertion only
  std::string target;                  // RoleAssertion only

  friend bool operator==(const ABoxAxiom&, const ABoxAxiom&) = default;
};

// An ALC knowledge base. Axiom lists keep source order; the name sets are
// filled as axioms are added.
class Ontology {
 public:
  void add(TBoxAxiom axiom);
  void add(RBoxAxiom axiom);
  void add(ABoxAxiom axiom);

  void declareClass(const std::string& name) { classes_.insert(name); }
  void declareRole(const std::string& name) { roles_.insert(name); }
  void declareIndividual(const std::string& name) { individuals_.insert(name); }

  const std::vector<TBoxAxiom>& tbox() const { return tbox_; }
  const std::vector<RBoxAxiom>& rbox() const { return rbox_; }
  const std::vector<ABoxAxiom>& abox() const { return abox_; }

  const std::set<std::string>& classes() const { return classes_; }
  const std::set<std::string>& roles() const { return roles_; }
  const std::set<std::string>& individuals() const { return individuals_; }

  std::size_t axiomCount() const { return tbox_.size() + rbox_.size() + abox_.size(); }

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  void declareNames(const Concept& c);

  std::vector<TBoxAxiom> tbox_;
  std::vector<RBoxAxiom> rbox_;
  std::vector<ABoxAxiom> abox_;
  std::set<std::string> classes_;
  std::set<std::string> roles_;
  std::set<std::string> individuals_;
};

// Occurrences of `name` as an Atomic node across all TBox and ABox
// expressions, counted on the axioms as written.
std::size_t conceptFrequency(std::string_view name, const Ontology& o);

}  // namespace dlorder
