#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dlorder/features.hpp"
#include "dlorder/heuristics.hpp"
#include "dlorder/runtime.hpp"

namespace dlorder {

// ---- corpus generation

struct IntRange {
  int lo = 1;
  int hi = 1;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct CorpusSpec {
  std::size_t count = 160;
  std::uint64_t seed = 1;
  IntRange classes{4, 8};
  IntRange roles{1, 3};
  IntRange axioms{3, 6};
  double disjunctionDensity = 0.3;  // chance that a boolean node is a disjunction
  IntRange quantifierDepth{1, 2};
  double orderingSensitiveFraction = 0.5;
  // Chained disjunctions per crafted instance.
  IntRange chainLength{12, 16};
  // Step cap per sweep while checking generated instances.
  std::uint64_t verifyBudget = 100000;

  // Throws ConfigError.
  void validate() const;

  friend bool operator==(const CorpusSpec&, const CorpusSpec&) = default;
};

// JSON object with the field names above; missing fields keep their defaults,
// ranges are two-element arrays.
CorpusSpec parseCorpusSpec(std::string_view json);
CorpusSpec loadCorpusSpec(const std::filesystem::path& path);
std::string corpusSpecJson(const CorpusSpec& spec);

enum class CorpusFamily { Random, SmallTrap, LargeTrap, GeneratingTrap, FrequencyTrap, Unknown };

std::string toText(CorpusFamily f);
CorpusFamily parseCorpusFamily(std::string_view s);
inline bool isOrderingSensitive(CorpusFamily f) {
  return f != CorpusFamily::Random && f != CorpusFamily::Unknown;
}

struct CorpusEntry {
  std::string id;
  CorpusFamily family = CorpusFamily::Unknown;
  std::string text;  // KRSS source

  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

// A class `Root` whose definition chains `chainLength` binary disjunctions.
// In each one a single disjunct leads to a clash that only shows up in an
// r-successor, after every disjunction has been decided, so an order that
// tries the wrong disjunct first backtracks through 2^n combinations.
//   SmallTrap       wrong disjunct is an atom, the other a nested conjunction
//   LargeTrap       wrong disjunct is a flat conjunction, the other an atom
//   GeneratingTrap  wrong disjunct is an existential
//   FrequencyTrap   both are atoms; they differ in how often they are mentioned
// `seed` shuffles the source order of the disjuncts and, for FrequencyTrap,
// picks which side is frequent.
std::string orderingTrap(CorpusFamily family, int chainLength, std::uint64_t seed);

// Deterministic in the spec. Every entry parses, is consistent and has a
// nondeterministic vertex; crafted entries also show a >= 10x step gap
// between two configs. Throws GenerationError when an entry cannot be
// produced within a bounded number of attempts.
std::vector<CorpusEntry> generateCorpus(const CorpusSpec& spec);

// One `<id>.krss` file per entry; the first line records the family.
void writeCorpus(const std::filesystem::path& dir, const std::vector<CorpusEntry>& corpus);
// All *.krss files of `dir`, ordered by id.
std::vector<CorpusEntry> readCorpus(const std::filesystem::path& dir);

// ---- benchmark sweeps

enum class CostMode { Steps, WallClock };

struct BenchOptions {
  // Steps per sweep in step mode, milliseconds in wall-clock mode.
  std::uint64_t budget = 100000;
  CostMode mode = CostMode::Steps;
  // Wall-clock mode only: step cap that keeps a runaway sweep finite.
  std::uint64_t stepLimit = 50000000;
  std::vector<int> configs{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::size_t repeats = 3;  // wall-clock only; step mode always runs once
  unsigned threads = 1;
  DefaultConfigThresholds defaults;  // for the standard baseline
};

struct BenchFailure {
  std::string id;
  std::string message;
};

struct BenchmarkResult {
  RuntimeTable runtimes;            // per-pair median over repeats
  std::vector<RuntimeTable> runs;   // one table per repeat
  RuntimeTable standard;            // defaultConfig of each ontology
  std::vector<FeatureRow> features;
  std::vector<BenchFailure> failures;  // unparsable ontologies
};

// One satisfiability sweep per (ontology, config). An ontology whose
// consistency check fails gets Inconsistent rows. Rows are ordered by corpus
// position, then config, whatever the thread count.
BenchmarkResult runBenchmark(const std::vector<CorpusEntry>& corpus, const BenchOptions& options);

// ---- eligibility filtering

enum class ExclusionReason { AllTimeout, Inconsistent, Unstable };

std::string toText(ExclusionReason r);

struct Exclusion {
  std::string id;
  ExclusionReason reason = ExclusionReason::AllTimeout;
  std::string detail;
};

struct FilterResult {
  RuntimeTable kept;
  std::vector<Exclusion> excluded;
};

// Keeps the rows of `t` for every eligible ontology. Drops ontologies that
// time out under every config or are inconsistent. `repeats` are repeated
// measurements (wall-clock mode); when the spread between the slowest and
// fastest config of an ontology falls below `closeness` times the fastest in
// some repeat, the ontology stays only if every repeat names the same fastest
// and slowest config. With fewer than two repeats that check is vacuous.
FilterResult filterEligible(const RuntimeTable& t, const std::vector<RuntimeTable>& repeats = {},
                            double closeness = 0.05);

std::string exclusionCsv(const std::vector<Exclusion>& log);

// ---- train/test split

struct IdSplit {
  std::vector<std::string> train;
  std::vector<std::string> test;
};

// ceil(n * testFraction) test ids picked by a seeded shuffle; both sides keep
// the input order. Throws TooFewExamples when n < 4.
IdSplit splitTrainTest(const std::vector<std::string>& ids, double testFraction, std::uint64_t seed);

RuntimeTable restrictTo(const RuntimeTable& t, const std::vector<std::string>& ids);
std::vector<FeatureRow> restrictTo(const std::vector<FeatureRow>& rows, const std::vector<std::string>& ids);

}  // namespace dlorder
