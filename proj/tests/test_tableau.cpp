#include <doctest.h>

#include <memory>

#include "dlorder/dag.hpp"
#include "dlorder/error.hpp"
#include "dlorder/krss.hpp"
#include "dlorder/oracle.hpp"
#include "dlorder/tableau.hpp"
#include "support/random_ontology.hpp"

using namespace dlorder;

namespace {

const char* kFig1 = "(implies C (some R D)) (implies C F) (equivalent A (or C D))";
constexpr std::uint64_t kGenerous = 2'000'000;

struct Encoded {
  Ontology o;
  std::shared_ptr<const Dag> dag;
};

Encoded encode(const std::string& text) {
  Encoded e{parseOntology(text), nullptr};
  e.dag = std::make_shared<const Dag>(encodeDag(e.o));
  return e;
}

MaybeConfig config(int n) { return n == 0 ? MaybeConfig{} : MaybeConfig{HeuristicConfig::fromNumber(n)}; }

SatResult satClass(const Encoded& e, const std::string& name, int cfg = 0, std::uint64_t budget = kGenerous) {
  return isSatisfiable(applyOrdering(e.dag, config(cfg)), {*e.dag->atom(name), false}, budget);
}

}  // namespace

TEST_CASE("bottom and plain clashes") {
  auto e = encode("(implies A (and B (not B))) (implies X Y)");
  auto od = applyOrdering(e.dag, std::nullopt);
  auto bottom = isSatisfiable(od, {Dag::kTop, true}, 10);
  CHECK(bottom.outcome == SatOutcome::Unsatisfiable);
  CHECK(bottom.steps <= 1);
  CHECK(satClass(e, "A").outcome == SatOutcome::Unsatisfiable);
  CHECK(satClass(e, "X").outcome == SatOutcome::Satisfiable);
}

TEST_CASE("example TBox") {
  auto e = encode(kFig1);
  CHECK(bruteForceSatisfiable(e.o, Concept::atomic("A"), 2));
  for (int n = 0; n <= 12; ++n) {
    CHECK(satClass(e, "A", n).outcome == SatOutcome::Satisfiable);
  }
  auto od = applyOrdering(e.dag, std::nullopt);
  CHECK(checkTBoxConsistency(od, 100).outcome == SatOutcome::Satisfiable);
  auto sweep = satisfiabilitySweep(od, 1000);
  CHECK(sweep.consistency.outcome == SatOutcome::Satisfiable);
  CHECK(sweep.perClass.size() == 4);
  for (const auto& [name, r] : sweep.perClass) {
    CHECK(r.outcome == SatOutcome::Satisfiable);
    CHECK(bruteForceSatisfiable(e.o, Concept::atomic(name), 3));
  }
  CHECK_FALSE(sweep.timedOut);
  std::uint64_t sum = sweep.consistency.steps;
  for (const auto& [name, r] : sweep.perClass) sum += r.steps;
  CHECK(sweep.totalSteps == sum);
}

TEST_CASE("TBox consistency") {
  auto empty = std::make_shared<const Dag>(encodeDag(Ontology{}));
  CHECK(checkTBoxConsistency(applyOrdering(empty, std::nullopt), 10).outcome == SatOutcome::Satisfiable);
  auto bad = encode("(implies *top* *bottom*)");
  CHECK(checkTBoxConsistency(applyOrdering(bad.dag, std::nullopt), 10).outcome == SatOutcome::Unsatisfiable);
}

TEST_CASE("sweep reports unsatisfiable classes and budget exhaustion") {
  auto e = encode("(implies A *bottom*) (implies B C)");
  auto sweep = satisfiabilitySweep(applyOrdering(e.dag, std::nullopt), 100);
  CHECK(sweep.perClass.at("A").outcome == SatOutcome::Unsatisfiable);
  CHECK(sweep.perClass.at("B").outcome == SatOutcome::Satisfiable);

  auto branching = encode("(implies *top* (or A B)) (implies A (or C D))");
  auto timed = satisfiabilitySweep(applyOrdering(branching.dag, std::nullopt), 1);
  CHECK(timed.timedOut);
  CHECK(timed.consistency.outcome == SatOutcome::BudgetExceeded);
  CHECK(timed.perClass.empty());
}

TEST_CASE("total budget caps the sweep") {
  auto e = encode("(implies *top* (or A B)) (implies A (or C D)) (implies C (some r D))");
  auto od = applyOrdering(e.dag, std::nullopt);
  auto full = satisfiabilitySweep(od, kGenerous);
  REQUIRE_FALSE(full.timedOut);
  auto capped = satisfiabilitySweep(od, kGenerous, full.totalSteps - 1);
  CHECK(capped.timedOut);
  CHECK(capped.totalSteps == full.totalSteps - 1);
  auto exact = satisfiabilitySweep(od, kGenerous, full.totalSteps + 1);
  CHECK_FALSE(exact.timedOut);
}

TEST_CASE("GCIs reach generated successors") {
  // Every element needs an r-successor in A, and A is disjoint from everything
  // reachable: unsatisfiable only through the internalized axiom.
  auto e = encode("(implies *top* (some r A)) (implies A (all r (not A)))");
  CHECK(satClass(e, "A").outcome == SatOutcome::Unsatisfiable);
  auto cyclic = encode("(implies *top* (some r B)) (implies B C)");
  auto r = satClass(cyclic, "C");
  CHECK(r.outcome == SatOutcome::Satisfiable);
  CHECK(r.maxDepth >= 1);
}

TEST_CASE("oracle limits") {
  Ontology empty;
  CHECK(bruteForceSatisfiable(empty, Concept::top(), 1));
  CHECK_FALSE(bruteForceSatisfiable(
      empty, Concept::conjunction({Concept::atomic("A"), Concept::negation(Concept::atomic("A"))}), 3));
  auto big = parseOntology("(implies A B) (implies C D) (implies E F)");
  CHECK_THROWS_AS(bruteForceSatisfiable(big, Concept::atomic("A"), 2), CapacityError);
  CHECK_THROWS_AS(bruteForceSatisfiable(empty, Concept::top(), 4), CapacityError);
}

TEST_CASE("property: agreement with brute force, ordering independence, determinism") {
  testing::RandomOntologies gen(41);
  std::size_t tests = 0;
  for (int i = 0; i < 120; ++i) {
    auto o = gen.ontology(1 + gen.below(4));
    auto dag = std::make_shared<const Dag>(encodeDag(o));
    for (const auto& [name, id] : dag->atoms()) {
      bool expected = bruteForceSatisfiable(o, Concept::atomic(name), 3);
      for (int n = 0; n <= 12; ++n) {
        auto od = applyOrdering(dag, config(n));
        auto r = isSatisfiable(od, {id, false}, kGenerous);
        REQUIRE(r.outcome != SatOutcome::BudgetExceeded);
        CHECK(r.steps >= r.branchPoints);
        if (r.outcome == SatOutcome::Satisfiable) CHECK(r.modelSize <= 3);
        CHECK((r.outcome == SatOutcome::Satisfiable) == expected);
        CHECK(isSatisfiable(od, {id, false}, kGenerous) == r);
        ++tests;
      }
    }
  }
  CHECK(tests > 1000);
}

TEST_CASE("property: budget monotonicity") {
  testing::RandomOntologies gen(42);
  for (int i = 0; i < 100; ++i) {
    auto o = gen.ontology(1 + gen.below(4));
    auto dag = std::make_shared<const Dag>(encodeDag(o));
    auto od = applyOrdering(dag, config(static_cast<int>(gen.below(13))));
    for (const auto& [name, id] : dag->atoms()) {
      auto full = isSatisfiable(od, {id, false}, kGenerous);
      REQUIRE(full.outcome != SatOutcome::BudgetExceeded);
      auto tight = isSatisfiable(od, {id, false}, full.steps + 1);
      CHECK(tight == full);
      auto bigger = isSatisfiable(od, {id, false}, full.steps * 3 + 7);
      CHECK(bigger == full);
      if (full.steps > 0) {
        auto cut = isSatisfiable(od, {id, false}, full.steps);
        CHECK(cut.outcome == SatOutcome::BudgetExceeded);
        CHECK(cut.steps == full.steps);
      }
    }
  }
}
