#include "dlorder/heuristics.hpp"

#include <algorithm>
#include <numeric>

#include "dlorder/error.hpp"
#include "dlorder/features.hpp"

namespace dlorder {

namespace {

constexpr std::array<std::string_view, HeuristicConfig::kCount> kLabels = {
    "Sap", "Sdp", "Fap", "Fdp", "Dap", "Ddp", "San", "Sdn", "Fan", "Fdn", "Dan", "Ddn"};

}  // namespace

HeuristicConfig HeuristicConfig::fromNumber(int number) {
  if (number < 1 || number > kCount) {
    throw ConfigError("config number " + std::to_string(number) + " outside 1..12");
  }
  return *parseConfig(kLabels[number - 1]);
}

int HeuristicConfig::number() const {
  auto label = this->label();
  auto it = std::find(kLabels.begin(), kLabels.end(), label);
  return static_cast<int>(it - kLabels.begin()) + 1;
}

std::string HeuristicConfig::label() const {
  std::string s(3, ' ');
  s[0] = metric == SortMetric::Size ? 'S' : metric == SortMetric::Depth ? 'D' : 'F';
  s[1] = direction == SortDirection::Ascending ? 'a' : 'd';
  s[2] = preferGenerating ? 'p' : 'n';
  return s;
}

MaybeConfig parseConfig(std::string_view s) {
  if (s == "0") return std::nullopt;
  if (s.size() != 3) throw ConfigError("invalid heuristic config '" + std::string(s) + "'");
  HeuristicConfig cfg;
  switch (s[0]) {
    case 'S': cfg.metric = SortMetric::Size; break;
    case 'D': cfg.metric = SortMetric::Depth; break;
    case 'F': cfg.metric = SortMetric::Frequency; break;
    default: throw ConfigError("invalid sort metric in '" + std::string(s) + "'");
  }
  switch (s[1]) {
    case 'a': cfg.direction = SortDirection::Ascending; break;
    case 'd': cfg.direction = SortDirection::Descending; break;
    default: throw ConfigError("invalid sort direction in '" + std::string(s) + "'");
  }
  switch (s[2]) {
    case 'p': cfg.preferGenerating = true; break;
    case 'n': cfg.preferGenerating = false; break;
    default: throw ConfigError("invalid preference in '" + std::string(s) + "'");
  }
  return cfg;
}

MaybeConfig parseConfigArgument(std::string_view s) {
  if (!s.empty() && s.size() <= 2 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    int n = std::stoi(std::string(s));
    if (n == 0) return std::nullopt;
    return HeuristicConfig::fromNumber(n);
  }
  return parseConfig(s);
}

std::string configLabel(const MaybeConfig& cfg) { return cfg ? cfg->label() : "0"; }

SortKey sortKey(const DagEdge& /*edge*/, const ConceptStats& stats, const HeuristicConfig& cfg,
                std::size_t position) {
  SortKey key;
  key.generatingRank = cfg.preferGenerating && !stats.generating ? 1 : 0;
  std::size_t metric = cfg.metric == SortMetric::Size    ? stats.size
                       : cfg.metric == SortMetric::Depth ? stats.depth
                                                         : stats.frequency;
  key.metricValue = static_cast<std::int64_t>(metric);
  if (cfg.direction == SortDirection::Descending) key.metricValue = -key.metricValue;
  key.tiebreak = position;
  return key;
}

OrderedDag::OrderedDag(std::shared_ptr<const Dag> dag, MaybeConfig cfg,
                       std::vector<std::vector<std::uint32_t>> permutation)
    : dag_(std::move(dag)), config_(cfg), permutation_(std::move(permutation)) {
  ordered_.resize(dag_->size());
  for (VertexId v = 0; v < dag_->size(); ++v) {
    const auto& children = dag_->vertex(v).children;
    auto& out = ordered_[v];
    out.reserve(children.size());
    for (auto i : permutation_[v]) out.push_back(children[i]);
  }
}

OrderedDag applyOrdering(std::shared_ptr<const Dag> dag, const MaybeConfig& cfg) {
  std::vector<std::vector<std::uint32_t>> perm(dag->size());
  for (VertexId v = 0; v < dag->size(); ++v) {
    const auto& vertex = dag->vertex(v);
    auto& p = perm[v];
    p.resize(vertex.children.size());
    std::iota(p.begin(), p.end(), 0u);
    if (!cfg || vertex.op != VertexOp::And) continue;
    std::vector<SortKey> keys;
    keys.reserve(p.size());
    // In a disjunction the tableau adds the negated edge.
    for (std::size_t i = 0; i < vertex.children.size(); ++i) {
      auto e = vertex.nondeterministic ? vertex.children[i].negate() : vertex.children[i];
      keys.push_back(sortKey(e, dag->signedStats(e), *cfg, i));
    }
    std::stable_sort(p.begin(), p.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  }
  return OrderedDag(std::move(dag), cfg, std::move(perm));
}

OrderedDag applyOrdering(const Dag& dag, const MaybeConfig& cfg) {
  return applyOrdering(std::make_shared<const Dag>(dag), cfg);
}

HeuristicConfig defaultConfig(const FeatureVector& f, const DefaultConfigThresholds& t) {
  bool likeGalen = f[Feature::NumGCIs] >= t.galenGciThreshold &&
                   f[Feature::NumInstances] <= t.galenAboxThreshold;
  bool likeWine = f[Feature::NumNominals] > 100 && f[Feature::NumGCIs] < t.galenGciThreshold;
  return *parseConfig(likeGalen ? "Fdn" : likeWine ? "Sdp" : "Sap");
}

}  // namespace dlorder
