#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlorder/concept.hpp"
#include "dlorder/ontology.hpp"

namespace dlorder {

using VertexId = std::uint32_t;

// A vertex reference carrying a negation flag. Used both for DAG edges and
// for tableau label entries.
struct VertexRef {
  VertexId id = 0;
  bool negated = false;

  VertexRef negate() const { return {id, !negated}; }
  // Dense encoding: 2 * id + negated.
  std::uint32_t code() const { return id * 2 + (negated ? 1 : 0); }
  static VertexRef fromCode(std::uint32_t code) { return {code / 2, (code & 1) != 0}; }

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

using DagEdge = VertexRef;

struct ConceptStats {
  std::size_t size = 0;
  std::size_t depth = 0;
  std::size_t frequency = 0;
  bool generating = false;

  friend bool operator==(const ConceptStats&, const ConceptStats&) = default;
};

enum class VertexOp { Top, Atomic, And, All };

struct DagVertex {
  VertexOp op = VertexOp::Top;
  std::string name;  // class name for Atomic, role name for All
  std::vector<DagEdge> children;
  ConceptStats stats;          // of the vertex read positively
  std::size_t negatedSize = 0; // size of the NNF of its negation
  bool nondeterministic = false;
};

// Operator-vertex encoding of an ontology.
//
// Only And/All/Atomic/Top vertices exist; ⊔ and ∃ are stored as negated
// references (C ⊔ D = ¬(¬C ⊓ ¬D), ∃r.C = ¬∀r.¬C). Vertices are hash-consed
// and listed children-first, so vertex ids form a topological order.
//
// TBox axioms are pre-processed for lazy unfolding: A ⊑ D contributes D to
// A's positive unfolding list; a unique acyclic A ≡ D additionally unfolds ¬A
// to ¬D. Everything else is internalized into `gciConstraint`, which the
// tableau adds to every node.
class Dag {
 public:
  static constexpr VertexId kTop = 0;

  const std::vector<DagVertex>& vertices() const { return vertices_; }
  const DagVertex& vertex(VertexId id) const { return vertices_.at(id); }
  std::size_t size() const { return vertices_.size(); }

  // Atomic vertex of a declared class.
  std::optional<VertexId> atom(const std::string& className) const;
  const std::map<std::string, VertexId>& atoms() const { return atoms_; }

  // Refs added when the atom is present positively / negatively in a label.
  const std::vector<VertexRef>& positiveUnfolding(VertexId atom) const;
  const std::optional<VertexRef>& negativeUnfolding(VertexId atom) const;

  // Named class -> definition references (the positive unfolding list).
  std::map<std::string, std::vector<VertexRef>> roots() const;

  const std::optional<VertexRef>& gciConstraint() const { return gciConstraint_; }
  // Number of TBox axioms (or axiom directions) that were not absorbed.
  std::size_t internalizedGciCount() const { return internalizedGcis_; }

  // Stats of the concept a signed reference denotes; a negated All is
  // generating.
  ConceptStats signedStats(VertexRef ref) const;

  // The NNF concept a signed reference denotes.
  Concept decode(VertexRef ref) const;

  // `id op [signed-child-ids] size depth freq nondet`, one vertex per line,
  // followed by unfolding and constraint lines. Negated children print as !id.
  std::string dump() const;

 private:
  friend class DagBuilder;

  std::vector<DagVertex> vertices_;
  std::map<std::string, VertexId> atoms_;
  std::vector<std::vector<VertexRef>> positiveUnfold_;
  std::vector<std::optional<VertexRef>> negativeUnfold_;
  std::optional<VertexRef> gciConstraint_;
  std::size_t internalizedGcis_ = 0;
};

Dag encodeDag(const Ontology& o);

// Ids of vertices with nondeterministic = true, ascending (topological).
std::vector<VertexId> nondeterministicVertices(const Dag& d);

// Stored stats of a vertex; throws std::out_of_range for an invalid id.
ConceptStats vertexStats(const Dag& d, VertexId v);

}  // namespace dlorder
