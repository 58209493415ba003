#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "dlorder/dag.hpp"
#include "dlorder/heuristics.hpp"

namespace dlorder {

enum class SatOutcome { Satisfiable, Unsatisfiable, BudgetExceeded };

std::string toText(SatOutcome o);

struct SatResult {
  SatOutcome outcome = SatOutcome::Satisfiable;
  // Rule applications: ⊓, each ⊔ branch entered, ∃, each ∀ propagation, each
  // unfolding, each global-constraint addition.
  std::uint64_t steps = 0;
  // ⊔-rule applications (choice points opened).
  std::uint64_t branchPoints = 0;
  std::size_t maxDepth = 0;
  // Satisfiable only: number of distinct maximal labels among unblocked
  // nodes, an upper bound on the size of the model the completion tree
  // induces.
  std::size_t modelSize = 0;

  friend bool operator==(const SatResult&, const SatResult&) = default;
};

// Tests whether `target` has a model w.r.t. the TBox encoded in `d`.
//
// Deterministic rules are saturated across the whole completion tree before a
// disjunction is branched on, and all disjunctions are resolved before any
// successor is generated; disjuncts are tried in the vertex's permuted order
// with chronological backtracking. Nodes whose label is a subset of an
// ancestor's are blocked. Returns BudgetExceeded as soon as `steps` reaches
// `budget`.
SatResult isSatisfiable(const OrderedDag& d, VertexRef target, std::uint64_t budget);

SatResult checkTBoxConsistency(const OrderedDag& d, std::uint64_t budget);

struct SweepResult {
  SatResult consistency;
  std::map<std::string, SatResult> perClass;
  std::uint64_t totalSteps = 0;
  bool timedOut = false;
  double elapsedMs = 0;
};

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

// Consistency check followed by a satisfiability test of every named class in
// name order. Each test gets `budgetPerTest` steps, capped by what is left of
// `totalBudget`; the sweep stops at the first BudgetExceeded.
SweepResult satisfiabilitySweep(const OrderedDag& d, std::uint64_t budgetPerTest,
                                std::uint64_t totalBudget = kUnlimited);

}  // namespace dlorder
