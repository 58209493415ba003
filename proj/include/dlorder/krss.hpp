#pragma once

#include <string>
#include <string_view>

#include "dlorder/concept.hpp"
#include "dlorder/ontology.hpp"

namespace dlorder {

// KRSS-style s-expression ontology text.
//
//   axioms:   (implies C D) (equivalent C D) (disjoint C D)
//             (implies-role r s) (transitive r)
//             (instance a C) (related a b r)
//   concepts: *top* *bottom* NAME (not C) (and C1 C2 ...) (or C1 C2 ...)
//             (some r C) (all r C)
//
// `;` starts a comment running to end of line. Throws SyntaxError with a
// 1-based line/column, or UnsupportedConstruct for non-ALC operators such as
// one-of or at-least.
Ontology parseOntology(std::string_view text);

// Parses a single concept expression.
Concept parseConcept(std::string_view text);

std::string toText(const Concept& c);

// One axiom per line, in tbox/rbox/abox order. parseOntology(unparse(o))
// reproduces `o`.
std::string unparse(const Ontology& o);

}  // namespace dlorder
