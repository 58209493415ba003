#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dlorder/features.hpp"
#include "dlorder/ml.hpp"
#include "dlorder/runtime.hpp"
#include "dlorder/selection.hpp"

namespace dlorder {

inline constexpr int kModelVersion = 1;

struct ConfigModel {
  int config = 1;
  Pipeline pipeline;
  double cvAccuracy = 0;

  friend bool operator==(const ConfigModel&, const ConfigModel&) = default;
};

// One trained classifier per heuristic plus the priority table that arbitrates
// between them.
struct ModelBundle {
  int version = kModelVersion;
  std::uint64_t seed = 0;
  double threshold = 0;
  PriorityTable priority{};
  std::vector<ConfigModel> models;  // configs 1..12 in order

  ConfigLabels predict(const FeatureVector& f) const;
  // selectHeuristic over predict(f).
  int choose(const FeatureVector& f) const;

  friend bool operator==(const ModelBundle&, const ModelBundle&) = default;
};

struct TrainOptions {
  GridSpec grid;
  std::size_t folds = 10;
  std::uint64_t seed = 1;
  unsigned threads = 1;  // configs trained concurrently; output does not depend on it
};

// Grid search per config, refit of the winner on all examples, priorities
// from the CV accuracies.
ModelBundle trainModelBundle(const LabeledDataset& data, double threshold, const TrainOptions& options);

// Versioned JSON document.
std::string serializeModelBundle(const ModelBundle& b);
// Throws VersionMismatch for an unknown version and CorruptModel for anything
// unreadable.
ModelBundle parseModelBundle(std::string_view text);
void saveModelBundle(const std::filesystem::path& path, const ModelBundle& b);
ModelBundle loadModelBundle(const std::filesystem::path& path);

}  // namespace dlorder
