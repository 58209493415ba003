#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dlorder/concept.hpp"
#include "dlorder/ontology.hpp"

namespace dlorder::testing {

// Small random ALC ontologies within the brute-force oracle's capacity.
class RandomOntologies {
 public:
  explicit RandomOntologies(std::uint64_t seed, std::size_t classes = 4, std::size_t roles = 2)
      : rng_(seed) {
    for (std::size_t i = 0; i < classes; ++i) classes_.push_back(std::string(1, char('A' + i)));
    for (std::size_t i = 0; i < roles; ++i) roles_.push_back(std::string(1, char('r' + i)));
  }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Concept expr(int depth) {
    auto pick = below(depth <= 0 ? 3 : 9);
    switch (pick) {
      case 0:
      case 1:
        return Concept::atomic(classes_[below(classes_.size())]);
      case 2:
        return Concept::negation(Concept::atomic(classes_[below(classes_.size())]));
      case 3:
        return Concept::negation(expr(depth - 1));
      case 4:
        return Concept::conjunction({expr(depth - 1), expr(depth - 1)});
      case 5:
      case 6:
        return Concept::disjunction({expr(depth - 1), expr(depth - 1)});
      case 7:
        return Concept::some(roles_[below(roles_.size())], expr(depth - 1));
      default:
        return Concept::all(roles_[below(roles_.size())], expr(depth - 1));
    }
  }

  Ontology ontology(std::size_t axioms) {
    Ontology o;
    for (const auto& c : classes_) o.declareClass(c);
    for (std::size_t i = 0; i < axioms; ++i) {
      auto kind = below(6);
      auto lhs = below(3) == 0 ? expr(1) : Concept::atomic(classes_[below(classes_.size())]);
      auto rhs = expr(2);
      if (kind <= 3) {
        o.add(TBoxAxiom{TBoxAxiom::Kind::Subsumption, lhs, rhs});
      } else if (kind == 4) {
        o.add(TBoxAxiom{TBoxAxiom::Kind::Equivalence, lhs, rhs});
      } else {
        o.add(TBoxAxiom{TBoxAxiom::Kind::Disjointness, lhs, rhs});
      }
    }
    return o;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> classes_;
  std::vector<std::string> roles_;
};

}  // namespace dlorder::testing
