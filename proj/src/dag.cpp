#include "dlorder/dag.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dlorder {

std::optional<VertexId> Dag::atom(const std::string& className) const {
  auto it = atoms_.find(className);
  if (it == atoms_.end()) return std::nullopt;
  return it->second;
}

const std::vector<VertexRef>& Dag::positiveUnfolding(VertexId atom) const {
  return positiveUnfold_.at(atom);
}

const std::optional<VertexRef>& Dag::negativeUnfolding(VertexId atom) const {
  return negativeUnfold_.at(atom);
}

std::map<std::string, std::vector<VertexRef>> Dag::roots() const {
  std::map<std::string, std::vector<VertexRef>> out;
  for (const auto& [name, id] : atoms_) {
    if (!positiveUnfold_[id].empty()) out.emplace(name, positiveUnfold_[id]);
  }
  return out;
}

ConceptStats Dag::signedStats(VertexRef ref) const {
  const auto& v = vertex(ref.id);
  ConceptStats s = v.stats;
  if (ref.negated) {
    s.size = v.negatedSize;
    s.generating = v.op == VertexOp::All;
  }
  return s;
}

Concept Dag::decode(VertexRef ref) const {
  const auto& v = vertex(ref.id);
  switch (v.op) {
    case VertexOp::Top:
      return ref.negated ? Concept::bottom() : Concept::top();
    case VertexOp::Atomic:
      return ref.negated ? Concept::negation(Concept::atomic(v.name)) : Concept::atomic(v.name);
    case VertexOp::And: {
      std::vector<Concept> children;
      for (const auto& e : v.children) children.push_back(decode(ref.negated ? e.negate() : e));
      return ref.negated ? Concept::disjunction(std::move(children))
                         : Concept::conjunction(std::move(children));
    }
    case VertexOp::All: {
      const auto& e = v.children.front();
      return ref.negated ? Concept::some(v.name, decode(e.negate())) : Concept::all(v.name, decode(e));
    }
  }
  return Concept::top();
}

namespace {

std::string refString(VertexRef r) {
  return (r.negated ? "!" : "") + std::to_string(r.id);
}

}  // namespace

std::string Dag::dump() const {
  std::ostringstream os;
  for (VertexId id = 0; id < vertices_.size(); ++id) {
    const auto& v = vertices_[id];
    os << id << ' ';
    switch (v.op) {
      case VertexOp::Top: os << "top"; break;
      case VertexOp::Atomic: os << "atom:" << v.name; break;
      case VertexOp::And: os << "and"; break;
      case VertexOp::All: os << "all:" << v.name; break;
    }
    os << " [";
    for (std::size_t i = 0; i < v.children.size(); ++i) {
      if (i) os << ',';
      os << refString(v.children[i]);
    }
    os << "] " << v.stats.size << ' ' << v.stats.depth << ' ' << v.stats.frequency << ' '
       << (v.nondeterministic ? 1 : 0) << '\n';
  }
  for (const auto& [name, id] : atoms_) {
    for (const auto& r : positiveUnfold_[id]) os << "unfold " << name << ' ' << refString(r) << '\n';
    if (negativeUnfold_[id]) os << "unfold !" << name << ' ' << refString(*negativeUnfold_[id]) << '\n';
  }
  if (gciConstraint_) os << "gci " << refString(*gciConstraint_) << '\n';
  return os.str();
}

class DagBuilder {
 public:
  explicit DagBuilder(const Ontology& o) : ontology_(o) {}

  Dag build() {
    auto& top = dag_.vertices_.emplace_back();
    top.op = VertexOp::Top;
    occurrences_.push_back(0);
    for (const auto& name : ontology_.classes()) internAtom(name);

    absorb();
    computeStats();
    markNondeterministic();
    return std::move(dag_);
  }

 private:
  using Key = std::tuple<VertexOp, std::string, std::vector<std::uint32_t>>;

  VertexId internAtom(const std::string& name) {
    if (auto it = dag_.atoms_.find(name); it != dag_.atoms_.end()) return it->second;
    DagVertex v;
    v.op = VertexOp::Atomic;
    v.name = name;
    auto id = push(std::move(v));
    dag_.atoms_.emplace(name, id);
    return id;
  }

  VertexId push(DagVertex v) {
    auto id = static_cast<VertexId>(dag_.vertices_.size());
    dag_.vertices_.push_back(std::move(v));
    occurrences_.push_back(0);
    return id;
  }

  VertexId intern(VertexOp op, const std::string& name, std::vector<DagEdge> children) {
    std::vector<std::uint32_t> codes;
    codes.reserve(children.size());
    for (const auto& e : children) codes.push_back(e.code());
    Key key{op, name, std::move(codes)};
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    DagVertex v;
    v.op = op;
    v.name = name;
    v.children = std::move(children);
    auto id = push(std::move(v));
    table_.emplace(std::move(key), id);
    return id;
  }

  // Duplicate children collapse; a single remaining child replaces the vertex.
  VertexRef makeAnd(std::vector<DagEdge> children) {
    std::vector<DagEdge> unique;
    for (const auto& e : children) {
      if (std::find(unique.begin(), unique.end(), e) == unique.end()) unique.push_back(e);
    }
    if (unique.size() == 1) return unique.front();
    return {intern(VertexOp::And, {}, std::move(unique)), false};
  }

  // Expects NNF input.
  VertexRef encode(const Concept& c) {
    using K = Concept::Kind;
    VertexRef ref;
    switch (c.kind()) {
      case K::Top:
        ref = {Dag::kTop, false};
        break;
      case K::Bottom:
        ref = {Dag::kTop, true};
        break;
      case K::Atomic:
        return {internAtom(c.name()), false};
      case K::Not:
        return encode(c.child()).negate();
      case K::And:
      case K::Or: {
        bool disj = c.is(K::Or);
        std::vector<DagEdge> children;
        for (const auto& child : c.children()) {
          auto r = encode(child);
          children.push_back(disj ? r.negate() : r);
        }
        ref = makeAnd(std::move(children));
        if (disj) ref = ref.negate();
        break;
      }
      case K::All:
        ref = {intern(VertexOp::All, c.name(), {encode(c.child())}), false};
        break;
      case K::Some:
        ref = {intern(VertexOp::All, c.name(), {encode(c.child()).negate()}), true};
        break;
    }
    if (dag_.vertices_[ref.id].op != VertexOp::Atomic) ++occurrences_[ref.id];
    return ref;
  }

  VertexRef encodeNnf(const Concept& c) { return encode(negationNormalForm(c)); }

  // ¬lhs ⊔ rhs
  void internalize(const Concept& lhs, const Concept& rhs) {
    ++dag_.internalizedGcis_;
    if (lhs.is(Concept::Kind::Top)) {
      gcis_.push_back(encodeNnf(rhs));
    } else {
      gcis_.push_back(encodeNnf(Concept::disjunction({Concept::negation(lhs), rhs})));
    }
  }

  void absorb() {
    struct Pending {
      std::vector<Concept> primitive;
      std::vector<Concept> equivalent;
    };
    std::map<std::string, Pending> defs;

    for (const auto& ax : ontology_.tbox()) {
      const auto& lhs = ax.lhs;
      const auto& rhs = ax.rhs;
      switch (ax.kind) {
        case TBoxAxiom::Kind::Subsumption:
          if (lhs.isAtomic()) {
            defs[lhs.name()].primitive.push_back(rhs);
          } else if (!lhs.is(Concept::Kind::Bottom)) {
            internalize(lhs, rhs);
          }
          break;
        case TBoxAxiom::Kind::Equivalence:
          if (lhs.isAtomic()) {
            defs[lhs.name()].equivalent.push_back(rhs);
          } else if (rhs.isAtomic()) {
            defs[rhs.name()].equivalent.push_back(lhs);
          } else {
            internalize(lhs, rhs);
            internalize(rhs, lhs);
          }
          break;
        case TBoxAxiom::Kind::Disjointness:
          if (lhs.isAtomic()) {
            defs[lhs.name()].primitive.push_back(Concept::negation(rhs));
          } else if (rhs.isAtomic()) {
            defs[rhs.name()].primitive.push_back(Concept::negation(lhs));
          } else {
            internalize(lhs, Concept::negation(rhs));
          }
          break;
      }
    }

    // Classes with a single equivalence and nothing else are definitional,
    // provided the definitions are acyclic among themselves.
    std::set<std::string> definitional;
    for (const auto& [name, p] : defs) {
      if (p.equivalent.size() == 1 && p.primitive.empty()) definitional.insert(name);
    }
    while (true) {
      std::map<std::string, std::vector<std::string>> uses;
      for (const auto& name : definitional) {
        std::vector<std::string> names;
        collectAtomicOccurrences(defs[name].equivalent.front(), names);
        for (auto& n : names) {
          if (definitional.count(n)) uses[name].push_back(std::move(n));
        }
      }
      auto cyclic = findCycleMembers(definitional, uses);
      if (cyclic.empty()) break;
      for (const auto& n : cyclic) definitional.erase(n);
    }

    for (const auto& [name, p] : defs) {
      auto atomId = internAtom(name);
      ensureUnfoldSlots();
      for (const auto& d : p.primitive) dag_.positiveUnfold_[atomId].push_back(encodeNnf(d));
      for (const auto& d : p.equivalent) {
        auto ref = encodeNnf(d);
        ensureUnfoldSlots();
        dag_.positiveUnfold_[atomId].push_back(ref);
        if (definitional.count(name)) {
          dag_.negativeUnfold_[atomId] = ref.negate();
        } else {
          internalize(d, Concept::atomic(name));
        }
      }
    }
    ensureUnfoldSlots();

    if (gcis_.size() == 1) {
      dag_.gciConstraint_ = gcis_.front();
    } else if (!gcis_.empty()) {
      std::vector<DagEdge> parts;
      for (const auto& g : gcis_) {
        const auto& v = dag_.vertices_[g.id];
        if (!g.negated && v.op == VertexOp::And) {
          parts.insert(parts.end(), v.children.begin(), v.children.end());
        } else {
          parts.push_back(g);
        }
      }
      auto ref = makeAnd(std::move(parts));
      if (dag_.vertices_[ref.id].op != VertexOp::Atomic) ++occurrences_[ref.id];
      dag_.gciConstraint_ = ref;
    }
    ensureUnfoldSlots();
  }

  void ensureUnfoldSlots() {
    dag_.positiveUnfold_.resize(dag_.vertices_.size());
    dag_.negativeUnfold_.resize(dag_.vertices_.size());
  }

  static std::set<std::string> findCycleMembers(
      const std::set<std::string>& nodes, const std::map<std::string, std::vector<std::string>>& uses) {
    // A node is on a cycle iff it can reach itself.
    std::set<std::string> out;
    for (const auto& start : nodes) {
      std::set<std::string> seen;
      std::vector<std::string> stack;
      auto pushSuccessors = [&](const std::string& n) {
        if (auto it = uses.find(n); it != uses.end()) {
          for (const auto& m : it->second) stack.push_back(m);
        }
      };
      pushSuccessors(start);
      while (!stack.empty()) {
        auto n = stack.back();
        stack.pop_back();
        if (n == start) {
          out.insert(start);
          break;
        }
        if (!seen.insert(n).second) continue;
        pushSuccessors(n);
      }
    }
    return out;
  }

  void computeStats() {
    for (VertexId id = 0; id < dag_.vertices_.size(); ++id) {
      auto& v = dag_.vertices_[id];
      auto sizeOf = [&](const DagEdge& e) {
        const auto& t = dag_.vertices_[e.id];
        return e.negated ? t.negatedSize : t.stats.size;
      };
      switch (v.op) {
        case VertexOp::Top:
          v.stats.size = 1;
          v.negatedSize = 1;
          v.stats.frequency = occurrences_[id];
          break;
        case VertexOp::Atomic:
          v.stats.size = 1;
          v.negatedSize = 2;
          v.stats.frequency = conceptFrequency(v.name, ontology_);
          break;
        case VertexOp::And:
        case VertexOp::All: {
          std::size_t pos = 1, neg = 1, depth = 0;
          for (const auto& e : v.children) {
            pos += sizeOf(e);
            neg += sizeOf(e.negate());
            depth = std::max(depth, dag_.vertices_[e.id].stats.depth);
          }
          v.stats.size = pos;
          v.negatedSize = neg;
          v.stats.depth = depth + (v.op == VertexOp::All ? 1 : 0);
          v.stats.frequency = occurrences_[id];
          break;
        }
      }
    }
  }

  // An And vertex reached through an odd number of negations acts as a
  // disjunction.
  void markNondeterministic() {
    std::vector<std::uint8_t> seen(dag_.vertices_.size() * 2, 0);
    std::vector<VertexRef> stack;
    auto visit = [&](VertexRef r) {
      if (!seen[r.code()]) {
        seen[r.code()] = 1;
        stack.push_back(r);
      }
    };
    for (VertexId id = 0; id < dag_.vertices_.size(); ++id) {
      for (const auto& r : dag_.positiveUnfold_[id]) visit(r);
      if (dag_.negativeUnfold_[id]) visit(*dag_.negativeUnfold_[id]);
    }
    if (dag_.gciConstraint_) visit(*dag_.gciConstraint_);
    while (!stack.empty()) {
      auto r = stack.back();
      stack.pop_back();
      auto& v = dag_.vertices_[r.id];
      if (v.op == VertexOp::And && r.negated) v.nondeterministic = true;
      for (const auto& e : v.children) visit(r.negated ? e.negate() : e);
    }
  }

  const Ontology& ontology_;
  Dag dag_;
  std::map<Key, VertexId> table_;
  std::vector<std::size_t> occurrences_;
  std::vector<VertexRef> gcis_;
};

Dag encodeDag(const Ontology& o) { return DagBuilder(o).build(); }

std::vector<VertexId> nondeterministicVertices(const Dag& d) {
  std::vector<VertexId> out;
  for (VertexId id = 0; id < d.size(); ++id) {
    if (d.vertex(id).nondeterministic) out.push_back(id);
  }
  return out;
}

ConceptStats vertexStats(const Dag& d, VertexId v) {
  if (v >= d.size()) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  return d.vertex(v).stats;
}

}  // namespace dlorder
