#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dlorder/features.hpp"
#include "dlorder/heuristics.hpp"

namespace dlorder {

// Inconsistent marks an ontology whose consistency check failed; the sweep
// never reached its classes.
enum class RunOutcome { Finished, Timeout, Inconsistent };

std::string toText(RunOutcome o);
RunOutcome parseRunOutcome(std::string_view s);

struct RuntimeRow {
  std::string id;
  int config = 1;  // 1..12
  double cost = 0; // steps, or milliseconds in wall-clock mode
  RunOutcome outcome = RunOutcome::Finished;

  friend bool operator==(const RuntimeRow&, const RuntimeRow&) = default;
};

struct RuntimeTable {
  std::vector<RuntimeRow> rows;
  double timeoutBudget = 0;

  // Ontology ids in order of first appearance.
  std::vector<std::string> ids() const;
  const RuntimeRow* find(std::string_view id, int config) const;

  friend bool operator==(const RuntimeTable&, const RuntimeTable&) = default;
};

// `id,config,cost,outcome`. The budget is not stored; readers take it from
// the cost of Timeout rows.
std::string runtimeCsv(const RuntimeTable& t);
RuntimeTable parseRuntimeCsv(std::string_view text);
void writeRuntimeCsv(const std::filesystem::path& path, const RuntimeTable& t);
RuntimeTable readRuntimeCsv(const std::filesystem::path& path);

struct CostMoments {
  double mean = 0;
  double std = 0;  // population standard deviation
};

// Mean and population standard deviation of the finished costs of one config.
CostMoments costMoments(const RuntimeTable& t, int config);

// Average over configs of mean + std.
double thresholdFromMoments(const std::vector<CostMoments>& perConfig);

// thresholdFromMoments over configs 1..12 of `t`, timeouts excluded. Throws
// InsufficientData when a config has fewer than two finished rows.
double computeThreshold(const RuntimeTable& t);

using ConfigLabels = std::array<bool, HeuristicConfig::kCount>;  // true = Good, index config-1

struct LabeledExample {
  std::string id;
  FeatureVector features;
  ConfigLabels good{};
};

using LabeledDataset = std::vector<LabeledExample>;

// Good iff the run finished with cost <= threshold. One example per id of
// `t`, in table order. Throws MissingFeatures if an id has no feature row.
LabeledDataset labelExamples(const RuntimeTable& t, double threshold, const std::vector<FeatureRow>& features);

}  // namespace dlorder
