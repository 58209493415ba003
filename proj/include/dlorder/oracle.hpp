#pragma once

#include <cstddef>

#include "dlorder/concept.hpp"
#include "dlorder/ontology.hpp"

namespace dlorder {

struct OracleLimits {
  std::size_t maxClasses = 4;
  std::size_t maxRoles = 2;
  std::size_t maxDomain = 3;
};

// Searches every interpretation over domains of 1..maxDomain elements for one
// that satisfies all TBox axioms and gives `target` a non-empty extension.
// Works on the concept trees directly (no DAG, no tableau). Partial
// interpretations are evaluated in three-valued logic so that subtrees which
// already falsify an axiom are skipped; the search is otherwise exhaustive.
//
// Throws CapacityError when the ontology or domain exceeds `limits`.
bool bruteForceSatisfiable(const Ontology& o, const Concept& target, std::size_t maxDomain,
                           const OracleLimits& limits = {});

}  // namespace dlorder
