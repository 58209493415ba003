#include "dlorder/runtime.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "dlorder/error.hpp"
#include "dlorder/text_util.hpp"

namespace dlorder {

std::string toText(RunOutcome o) {
  switch (o) {
    case RunOutcome::Finished: return "Finished";
    case RunOutcome::Timeout: return "Timeout";
    case RunOutcome::Inconsistent: return "Inconsistent";
  }
  return "?";
}

RunOutcome parseRunOutcome(std::string_view s) {
  if (s == "Finished") return RunOutcome::Finished;
  if (s == "Timeout") return RunOutcome::Timeout;
  if (s == "Inconsistent") return RunOutcome::Inconsistent;
  throw IoError("unknown run outcome '" + std::string(s) + "'");
}

std::vector<std::string> RuntimeTable::ids() const {
  std::vector<std::string> out;
  std::set<std::string_view> seen;
  for (const auto& r : rows) {
    if (seen.insert(r.id).second) out.push_back(r.id);
  }
  return out;
}

const RuntimeRow* RuntimeTable::find(std::string_view id, int config) const {
  for (const auto& r : rows) {
    if (r.id == id && r.config == config) return &r;
  }
  return nullptr;
}

std::string runtimeCsv(const RuntimeTable& t) {
  std::string out = "id,config,cost,outcome\n";
  for (const auto& r : t.rows) {
    checkCsvField(r.id);
    out += r.id + ',' + std::to_string(r.config) + ',' + formatDouble(r.cost) + ',' + toText(r.outcome) + '\n';
  }
  return out;
}

RuntimeTable parseRuntimeCsv(std::string_view text) {
  auto lines = splitLines(text);
  if (lines.empty() || lines.front() != "id,config,cost,outcome") {
    throw IoError("runtime CSV: expected header 'id,config,cost,outcome'");
  }
  RuntimeTable t;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    auto f = splitFields(lines[l]);
    if (f.size() != 4) throw IoError("runtime CSV: line " + std::to_string(l + 1) + " needs 4 fields");
    RuntimeRow r;
    r.id = std::string(f[0]);
    r.config = static_cast<int>(parseInteger(f[1]));
    if (r.config < 1 || r.config > HeuristicConfig::kCount) {
      throw IoError("runtime CSV: line " + std::to_string(l + 1) + ": config outside 1..12");
    }
    r.cost = parseDouble(f[2]);
    r.outcome = parseRunOutcome(f[3]);
    if (r.outcome == RunOutcome::Timeout) t.timeoutBudget = std::max(t.timeoutBudget, r.cost);
    t.rows.push_back(std::move(r));
  }
  return t;
}

void writeRuntimeCsv(const std::filesystem::path& path, const RuntimeTable& t) {
  writeTextFile(path, runtimeCsv(t));
}

RuntimeTable readRuntimeCsv(const std::filesystem::path& path) { return parseRuntimeCsv(readTextFile(path)); }

CostMoments costMoments(const RuntimeTable& t, int config) {
  std::vector<double> costs;
  for (const auto& r : t.rows) {
    if (r.config == config && r.outcome == RunOutcome::Finished) costs.push_back(r.cost);
  }
  if (costs.size() < 2) {
    throw InsufficientData("config " + std::to_string(config) + " has " + std::to_string(costs.size()) +
                           " finished runs; at least 2 are needed");
  }
  double sum = 0;
  for (double c : costs) sum += c;
  CostMoments m;
  m.mean = sum / static_cast<double>(costs.size());
  double sq = 0;
  for (double c : costs) sq += (c - m.mean) * (c - m.mean);
  m.std = std::sqrt(sq / static_cast<double>(costs.size()));
  return m;
}

double thresholdFromMoments(const std::vector<CostMoments>& perConfig) {
  if (perConfig.empty()) throw InsufficientData("no configurations");
  double sum = 0;
  for (const auto& m : perConfig) sum += m.mean + m.std;
  return sum / static_cast<double>(perConfig.size());
}

double computeThreshold(const RuntimeTable& t) {
  std::vector<CostMoments> moments;
  for (int c = 1; c <= HeuristicConfig::kCount; ++c) moments.push_back(costMoments(t, c));
  return thresholdFromMoments(moments);
}

LabeledDataset labelExamples(const RuntimeTable& t, double threshold, const std::vector<FeatureRow>& features) {
  std::map<std::string_view, const FeatureVector*> byId;
  for (const auto& [id, fv] : features) byId.emplace(id, &fv);
  std::map<std::string_view, std::size_t> index;
  LabeledDataset out;
  auto ids = t.ids();
  for (const auto& id : ids) {
    auto it = byId.find(id);
    if (it == byId.end()) throw MissingFeatures("no feature row for ontology '" + id + "'");
    index.emplace(id, out.size());
    out.push_back({id, *it->second, {}});
  }
  for (const auto& r : t.rows) {
    auto& ex = out[index.at(r.id)];
    ex.good[static_cast<std::size_t>(r.config - 1)] = r.outcome == RunOutcome::Finished && r.cost <= threshold;
  }
  return out;
}

}  // namespace dlorder
