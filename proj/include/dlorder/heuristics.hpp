#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlorder/dag.hpp"

namespace dlorder {

struct FeatureVector;

enum class SortMetric { Size, Depth, Frequency };
enum class SortDirection { Ascending, Descending };

// One of the twelve "Mop" expansion orderings: metric character (S, D, F),
// direction (a, d) and generating preference (p, n).
struct HeuristicConfig {
  SortMetric metric = SortMetric::Size;
  SortDirection direction = SortDirection::Ascending;
  bool preferGenerating = true;

  static constexpr int kCount = 12;

  // Config numbers 1..12 in table order: Sap Sdp Fap Fdp Dap Ddp San Sdn Fan
  // Fdn Dan Ddn.
  static HeuristicConfig fromNumber(int number);
  int number() const;
  std::string label() const;

  friend bool operator==(const HeuristicConfig&, const HeuristicConfig&) = default;
};

// Absence of a config ("0"): no sorting imposed.
using MaybeConfig = std::optional<HeuristicConfig>;

// Accepts a Mop label or "0". Throws ConfigError otherwise.
MaybeConfig parseConfig(std::string_view s);

// Also accepts config numbers "1".."12" (CLI convenience).
MaybeConfig parseConfigArgument(std::string_view s);

std::string configLabel(const MaybeConfig& cfg);

struct SortKey {
  int generatingRank = 0;
  std::int64_t metricValue = 0;
  std::size_t tiebreak = 0;

  friend auto operator<=>(const SortKey&, const SortKey&) = default;
};

// `edge` is the child as the tableau adds it: the edge itself under a
// conjunction, its negation under a nondeterministic vertex. `stats` are that
// signed child's stats.
SortKey sortKey(const DagEdge& edge, const ConceptStats& stats, const HeuristicConfig& cfg,
                std::size_t position);

// A DAG together with a per-vertex ordering of And children. The DAG itself is
// shared and never modified.
class OrderedDag {
 public:
  OrderedDag(std::shared_ptr<const Dag> dag, MaybeConfig cfg,
             std::vector<std::vector<std::uint32_t>> permutation);

  const Dag& dag() const { return *dag_; }
  std::shared_ptr<const Dag> sharedDag() const { return dag_; }
  const MaybeConfig& config() const { return config_; }

  // permutation(v)[i] = original index of the child placed at position i.
  const std::vector<std::uint32_t>& permutation(VertexId v) const { return permutation_.at(v); }
  // Children of v in expansion order.
  const std::vector<DagEdge>& orderedChildren(VertexId v) const { return ordered_.at(v); }

 private:
  std::shared_ptr<const Dag> dag_;
  MaybeConfig config_;
  std::vector<std::vector<std::uint32_t>> permutation_;
  std::vector<std::vector<DagEdge>> ordered_;
};

// Stable-sorts the children of every And vertex by sortKey; nullopt keeps
// source order. Nondeterministic vertices are keyed on their disjuncts.
OrderedDag applyOrdering(std::shared_ptr<const Dag> dag, const MaybeConfig& cfg);
OrderedDag applyOrdering(const Dag& dag, const MaybeConfig& cfg);

struct DefaultConfigThresholds {
  double galenGciThreshold = 100;
  double galenAboxThreshold = 10;
};

// GALEN-like -> Fdn, Wine-like -> Sdp, otherwise Sap.
HeuristicConfig defaultConfig(const FeatureVector& f, const DefaultConfigThresholds& t = {});

}  // namespace dlorder
