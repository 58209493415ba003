#include <doctest.h>

#include <set>
#include <stdexcept>

#include "dlorder/dag.hpp"
#include "dlorder/krss.hpp"
#include "dlorder/oracle.hpp"
#include "support/random_ontology.hpp"

using namespace dlorder;

namespace {

const char* kFig1 = "(implies C (some R D)) (implies C F) (equivalent A (or C D))";

bool equivalent(const Concept& a, const Concept& b) {
  Ontology empty;
  return !bruteForceSatisfiable(empty, Concept::conjunction({a, Concept::negation(b)}), 3) &&
         !bruteForceSatisfiable(empty, Concept::conjunction({Concept::negation(a), b}), 3);
}

}  // namespace

TEST_CASE("example TBox encodes to one disjunction vertex") {
  auto d = encodeDag(parseOntology(kFig1));
  auto nondet = nondeterministicVertices(d);
  REQUIRE(nondet.size() == 1);
  const auto& v = d.vertex(nondet[0]);
  CHECK(v.op == VertexOp::And);
  REQUIRE(v.children.size() == 2);
  CHECK(v.children[0] == VertexRef{*d.atom("C"), true});
  CHECK(v.children[1] == VertexRef{*d.atom("D"), true});
  // A's definition points at the And through a negated edge.
  auto roots = d.roots();
  REQUIRE(roots["A"].size() == 1);
  CHECK(roots["A"][0] == VertexRef{nondet[0], true});
  CHECK(d.negativeUnfolding(*d.atom("A")) == VertexRef{nondet[0], false});
  CHECK_FALSE(d.gciConstraint().has_value());
  CHECK(d.internalizedGciCount() == 0);
}

TEST_CASE("example TBox golden dump") {
  auto d = encodeDag(parseOntology(kFig1));
  CHECK(d.dump() ==
        "0 top [] 1 0 0 0\n"
        "1 atom:A [] 1 0 1 0\n"
        "2 atom:C [] 1 0 3 0\n"
        "3 atom:D [] 1 0 2 0\n"
        "4 atom:F [] 1 0 1 0\n"
        "5 and [!2,!3] 5 0 1 1\n"
        "6 all:R [!3] 3 1 1 0\n"
        "unfold A !5\n"
        "unfold !A 5\n"
        "unfold C !6\n"
        "unfold C 4\n");
}

TEST_CASE("vertex stats") {
  auto d = encodeDag(parseOntology(kFig1));
  auto c = vertexStats(d, *d.atom("C"));
  CHECK(c.size == 1);
  CHECK(c.depth == 0);
  CHECK(c.frequency == 3);
  auto top = vertexStats(d, Dag::kTop);
  CHECK(top.size == 1);
  CHECK(top.depth == 0);
  auto someRD = d.roots()["C"][0];
  REQUIRE(d.vertex(someRD.id).op == VertexOp::All);
  CHECK(vertexStats(d, someRD.id).size == 3);
  CHECK(vertexStats(d, someRD.id).depth == 1);
  CHECK(d.signedStats(someRD).generating);
  CHECK_FALSE(d.signedStats(someRD.negate()).generating);
  CHECK_THROWS_AS(vertexStats(d, 1000), std::out_of_range);
}

TEST_CASE("atomic subsumption has no nondeterminism") {
  auto d = encodeDag(parseOntology("(implies A B)"));
  std::size_t atoms = 0;
  for (const auto& v : d.vertices()) atoms += v.op == VertexOp::Atomic;
  CHECK(atoms == 2);
  CHECK(nondeterministicVertices(d).empty());
}

TEST_CASE("duplicate disjuncts collapse to a direct reference") {
  auto d = encodeDag(parseOntology("(equivalent A (or C C))"));
  CHECK(nondeterministicVertices(d).empty());
  auto roots = d.roots();
  REQUIRE(roots["A"].size() == 1);
  CHECK(roots["A"][0] == VertexRef{*d.atom("C"), false});
}

TEST_CASE("conjunction-only ontology is deterministic") {
  auto d = encodeDag(parseOntology("(implies A (and B C)) (implies D (and B (all r A)))"));
  CHECK(nondeterministicVertices(d).empty());
}

TEST_CASE("k distinct disjunctions give k nondeterministic vertices") {
  testing::RandomOntologies gen(21, 6, 2);
  for (std::size_t k = 1; k <= 6; ++k) {
    Ontology o;
    for (std::size_t i = 0; i < k; ++i) {
      auto a = std::string(1, char('A' + i));
      auto b = std::string(1, char('A' + (i + 1) % 6));
      o.add(TBoxAxiom{TBoxAxiom::Kind::Subsumption, Concept::atomic("X" + a),
                      Concept::disjunction({Concept::atomic(a), Concept::atomic(b)})});
    }
    CHECK(nondeterministicVertices(encodeDag(o)).size() == k);
  }
}

TEST_CASE("shared subexpressions get one vertex") {
  auto d = encodeDag(parseOntology(
      "(implies A (or B (some r C))) (implies D (or E (some r C))) (implies F (and G (some r C)))"));
  std::size_t alls = 0;
  for (const auto& v : d.vertices()) {
    if (v.op != VertexOp::All) continue;
    ++alls;
    CHECK(v.stats.frequency == 3);
  }
  CHECK(alls == 1);
}

TEST_CASE("general axioms are internalized") {
  auto d = encodeDag(parseOntology("(implies (some r A) B) (implies *top* (or A B))"));
  CHECK(d.internalizedGciCount() == 2);
  REQUIRE(d.gciConstraint().has_value());
  CHECK(nondeterministicVertices(d).size() == 2);
}

TEST_CASE("property: vertices are topologically ordered and hash-consed") {
  testing::RandomOntologies gen(22, 5, 2);
  for (int i = 0; i < 200; ++i) {
    auto d = encodeDag(gen.ontology(1 + gen.below(8)));
    std::set<std::pair<int, std::vector<std::uint32_t>>> seen;
    for (std::size_t id = 0; id < d.size(); ++id) {
      const auto& v = d.vertex(static_cast<VertexId>(id));
      std::vector<std::uint32_t> key;
      for (const auto& e : v.children) {
        CHECK(e.id < id);
        key.push_back(e.code());
      }
      if (v.op == VertexOp::And || v.op == VertexOp::All) {
        auto op = v.op == VertexOp::And ? 0 : 1;
        if (v.op == VertexOp::All) key.push_back(std::hash<std::string>{}(v.name) & 0xffffff);
        CHECK(seen.insert({op, key}).second);
      }
      if (v.op == VertexOp::And) CHECK(v.children.size() >= 2);
      if (v.op == VertexOp::All) CHECK(v.children.size() == 1);
    }
  }
}

TEST_CASE("property: stats agree with the decoded concept") {
  testing::RandomOntologies gen(23, 5, 2);
  for (int i = 0; i < 200; ++i) {
    auto d = encodeDag(gen.ontology(1 + gen.below(8)));
    for (std::size_t id = 0; id < d.size(); ++id) {
      VertexRef ref{static_cast<VertexId>(id), false};
      auto c = d.decode(ref);
      CHECK(d.vertex(ref.id).stats.size == conceptSize(c));
      CHECK(d.vertex(ref.id).stats.depth == conceptDepth(c));
      CHECK(d.vertex(ref.id).negatedSize == conceptSize(d.decode(ref.negate())));
    }
  }
}

TEST_CASE("property: decoding a definition gives an equivalent concept") {
  testing::RandomOntologies gen(24, 3, 2);
  for (int i = 0; i < 200; ++i) {
    auto c = gen.expr(3);
    Ontology o;
    o.add(TBoxAxiom{TBoxAxiom::Kind::Subsumption, Concept::atomic("X"), c});
    auto d = encodeDag(o);
    auto defs = d.roots()["X"];
    auto nnf = negationNormalForm(c);
    if (nnf.is(Concept::Kind::Top)) {
      CHECK(defs.empty());
      continue;
    }
    REQUIRE(defs.size() == 1);
    CHECK(equivalent(d.decode(defs[0]), nnf));
  }
}
