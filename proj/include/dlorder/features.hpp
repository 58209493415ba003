#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlorder/dag.hpp"
#include "dlorder/ontology.hpp"

namespace dlorder {

// Frozen feature order. Models refer to features by these indices.
enum class Feature : std::size_t {
  // ontology metrics
  NumNominals,
  NumInstances,
  NumClasses,
  AvgPopulation,
  NumGCIs,
  NumGeneratingRules,
  TboxRatio,
  RboxRatio,
  AboxRatio,
  NumObjectProperties,
  NumInverseObjectProperties,
  NumSubclassAxioms,
  NumEquivalentClassAxioms,
  NumDisjointClassAxioms,
  // non-deterministic vertex metrics
  NumNondetVertices,
  AvgOfAvgChildSize,
  AvgOfAvgChildDepth,
  AvgOfAvgChildFrequency,
  MaxChildrenPerVertex,
  AvgChildrenPerVertex,
  NumPositiveChildOccurrences,
  NumNegativeChildOccurrences,
  PositiveChildRatio,
  NegativeChildRatio,
  // syntactic and DAG counts
  TotalAxioms,
  NumConjunctions,
  NumDisjunctions,
  NumExistentials,
  NumUniversals,
  NumNegations,
  MaxConceptSize,
  AvgConceptSize,
  MaxConceptDepth,
  AvgConceptDepth,
  TotalDagVertices,
  NondetVertexRatio,
  MaxChildFrequency,
  AvgDisjunctsPerNondetVertex,
  SourceSizeBytes,
};

inline constexpr std::size_t kFeatureCount = 39;

const std::array<std::string_view, kFeatureCount>& featureNames();

struct FeatureVector {
  std::array<double, kFeatureCount> values{};

  double operator[](Feature f) const { return values[static_cast<std::size_t>(f)]; }
  double& operator[](Feature f) { return values[static_cast<std::size_t>(f)]; }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

// Expects d = encodeDag(o).
FeatureVector extractFeatures(const Ontology& o, const Dag& d);

using FeatureRow = std::pair<std::string, FeatureVector>;

// `id,<39 feature names>` header, one row per ontology. Values are written in
// shortest round-trip form so reading them back is bit-exact.
void writeFeatureCsv(const std::filesystem::path& path, const std::vector<FeatureRow>& rows);
std::string featureCsv(const std::vector<FeatureRow>& rows);
std::vector<FeatureRow> readFeatureCsv(const std::filesystem::path& path);
std::vector<FeatureRow> parseFeatureCsv(std::string_view text);

}  // namespace dlorder
