#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlorder/features.hpp"
#include "dlorder/model.hpp"
#include "dlorder/runtime.hpp"

namespace dlorder {

struct Prediction {
  std::string id;
  int config = 1;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

std::vector<Prediction> predictConfigs(const ModelBundle& model, const std::vector<FeatureRow>& features);

// `id,config,label`
std::string predictionsCsv(const std::vector<Prediction>& p);
std::vector<Prediction> parsePredictionsCsv(std::string_view text);

// The row of `full` for each prediction's (id, config). Throws MismatchedIds
// when one is missing.
RuntimeTable selectedRuntimes(const RuntimeTable& full, const std::vector<Prediction>& p);

struct SpeedupEntry {
  std::string id;
  int learnedConfig = 1;
  double learnedCost = 0;
  bool learnedTimeout = false;
  int standardConfig = 1;
  double standardCost = 0;
  bool standardTimeout = false;
  double ratio = 1;  // standard / learned
};

struct SpeedupReport {
  std::vector<SpeedupEntry> entries;
  double budget = 0;
  double maxRatio = 0;
  double meanRatio = 0;
  double geoMeanRatio = 0;
  double learnedSum = 0;
  double standardSum = 0;
  double learnedMean = 0;
  double standardMean = 0;
  std::size_t learnedTimeouts = 0;
  std::size_t standardTimeouts = 0;
};

// `learned` and `standard` hold one row per ontology with the same ids.
// Timeouts are valued at `budget`. Ratios divide costs floored at 1 so a
// zero-step sweep cannot produce an infinite ratio. Throws MismatchedIds.
SpeedupReport speedupReport(const RuntimeTable& learned, const RuntimeTable& standard, double budget);

// Per-config F-score of the model's Good predictions against the labels the
// model's threshold gives `runtimes`.
std::array<double, HeuristicConfig::kCount> configFScores(const ModelBundle& model, const RuntimeTable& runtimes,
                                                         const std::vector<FeatureRow>& features);

struct ReportContext {
  // Every config's cost for the reported ontologies; adds the per-config table.
  const RuntimeTable* runtimes = nullptr;
  std::optional<std::array<double, HeuristicConfig::kCount>> fScores;
  std::optional<double> threshold;
};

// Plain-text report: per-ontology costs, speedup summary, F-scores, sums.
std::string renderReport(const SpeedupReport& r, const ReportContext& context = {});

}  // namespace dlorder
