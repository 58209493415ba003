#include "dlorder/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "dlorder/error.hpp"
#include "dlorder/selection.hpp"
#include "dlorder/text_util.hpp"

namespace dlorder {

std::vector<Prediction> predictConfigs(const ModelBundle& model, const std::vector<FeatureRow>& features) {
  std::vector<Prediction> out;
  for (const auto& [id, f] : features) out.push_back({id, model.choose(f)});
  return out;
}

std::string predictionsCsv(const std::vector<Prediction>& p) {
  std::string out = "id,config,label\n";
  for (const auto& x : p) {
    checkCsvField(x.id);
    out += x.id + ',' + std::to_string(x.config) + ',' + HeuristicConfig::fromNumber(x.config).label() + '\n';
  }
  return out;
}

std::vector<Prediction> parsePredictionsCsv(std::string_view text) {
  auto lines = splitLines(text);
  if (lines.empty() || lines.front() != "id,config,label") throw IoError("predictions CSV: expected header 'id,config,label'");
  std::vector<Prediction> out;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    auto f = splitFields(lines[l]);
    if (f.size() != 3) throw IoError("predictions CSV: line " + std::to_string(l + 1) + " needs 3 fields");
    auto config = static_cast<int>(parseInteger(f[1]));
    if (config < 1 || config > HeuristicConfig::kCount) {
      throw IoError("predictions CSV: line " + std::to_string(l + 1) + ": config outside 1..12");
    }
    out.push_back({std::string(f[0]), config});
  }
  return out;
}

RuntimeTable selectedRuntimes(const RuntimeTable& full, const std::vector<Prediction>& p) {
  RuntimeTable out;
  out.timeoutBudget = full.timeoutBudget;
  for (const auto& x : p) {
    auto row = full.find(x.id, x.config);
    if (!row) throw MismatchedIds("no runtime for '" + x.id + "' under config " + std::to_string(x.config));
    out.rows.push_back(*row);
  }
  return out;
}

SpeedupReport speedupReport(const RuntimeTable& learned, const RuntimeTable& standard, double budget) {
  if (learned.rows.size() != standard.rows.size()) throw MismatchedIds("learned and standard tables differ in length");
  std::map<std::string_view, const RuntimeRow*> byId;
  for (const auto& r : standard.rows) {
    if (!byId.emplace(r.id, &r).second) throw MismatchedIds("duplicate id '" + r.id + "' in standard table");
  }
  SpeedupReport rep;
  rep.budget = budget;
  double logSum = 0;
  double ratioSum = 0;
  for (const auto& l : learned.rows) {
    auto it = byId.find(l.id);
    if (it == byId.end()) throw MismatchedIds("'" + l.id + "' has no standard runtime");
    const auto& s = *it->second;
    SpeedupEntry e;
    e.id = l.id;
    e.learnedConfig = l.config;
    e.learnedTimeout = l.outcome == RunOutcome::Timeout;
    e.learnedCost = e.learnedTimeout ? budget : l.cost;
    e.standardConfig = s.config;
    e.standardTimeout = s.outcome == RunOutcome::Timeout;
    e.standardCost = e.standardTimeout ? budget : s.cost;
    e.ratio = std::max(e.standardCost, 1.0) / std::max(e.learnedCost, 1.0);
    rep.maxRatio = std::max(rep.maxRatio, e.ratio);
    ratioSum += e.ratio;
    logSum += std::log(e.ratio);
    rep.learnedSum += e.learnedCost;
    rep.standardSum += e.standardCost;
    rep.learnedTimeouts += e.learnedTimeout;
    rep.standardTimeouts += e.standardTimeout;
    rep.entries.push_back(std::move(e));
  }
  if (!rep.entries.empty()) {
    auto n = static_cast<double>(rep.entries.size());
    rep.meanRatio = ratioSum / n;
    rep.geoMeanRatio = std::exp(logSum / n);
    rep.learnedMean = rep.learnedSum / n;
    rep.standardMean = rep.standardSum / n;
  }
  return rep;
}

std::array<double, HeuristicConfig::kCount> configFScores(const ModelBundle& model, const RuntimeTable& runtimes,
                                                         const std::vector<FeatureRow>& features) {
  auto data = labelExamples(runtimes, model.threshold, features);
  std::array<double, HeuristicConfig::kCount> out{};
  std::vector<ConfigLabels> predicted;
  for (const auto& ex : data) predicted.push_back(model.predict(ex.features));
  for (std::size_t c = 0; c < out.size(); ++c) {
    std::vector<bool> p, a;
    for (std::size_t i = 0; i < data.size(); ++i) {
      p.push_back(predicted[i][c]);
      a.push_back(data[i].good[c]);
    }
    out[c] = fScore(p, a);
  }
  return out;
}

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string cell(const RuntimeRow* r) {
  if (!r) return "-";
  if (r->outcome == RunOutcome::Timeout) return "TO";
  if (r->outcome == RunOutcome::Inconsistent) return "INC";
  return formatDouble(r->cost);
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

}  // namespace

std::string renderReport(const SpeedupReport& r, const ReportContext& ctx) {
  std::string out;
  if (ctx.runtimes) {
    out += "Runtimes per configuration (* = selected, TO = budget exhausted)\n";
    std::size_t idw = 2;
    for (const auto& e : r.entries) idw = std::max(idw, e.id.size());
    std::string line = pad("id", idw);
    for (int c = 1; c <= HeuristicConfig::kCount; ++c) {
      line += ' ' + pad(std::to_string(c) + ':' + HeuristicConfig::fromNumber(c).label(), 10);
    }
    line += ' ' + pad("standard", 10);
    out += line + '\n';
    for (const auto& e : r.entries) {
      line = pad(e.id, idw);
      for (int c = 1; c <= HeuristicConfig::kCount; ++c) {
        auto text = cell(ctx.runtimes->find(e.id, c));
        if (c == e.learnedConfig) text = '*' + text;
        line += ' ' + pad(text, 10);
      }
      line += ' ' + pad(e.standardTimeout ? "TO" : formatDouble(e.standardCost), 10);
      out += line + '\n';
    }
    out += '\n';
  }

  out += "Per-ontology speedup (standard / learned)\n";
  for (const auto& e : r.entries) {
    out += e.id + "  learned " + HeuristicConfig::fromNumber(e.learnedConfig).label() + ' ' +
           (e.learnedTimeout ? "TO" : formatDouble(e.learnedCost)) + "  standard " +
           HeuristicConfig::fromNumber(e.standardConfig).label() + ' ' +
           (e.standardTimeout ? "TO" : formatDouble(e.standardCost)) + "  ratio " + fixed(e.ratio, 2) + '\n';
  }
  out += '\n';

  out += "Speedup factor\n";
  out += "  ontologies      " + std::to_string(r.entries.size()) + '\n';
  out += "  maximum         " + fixed(r.maxRatio, 2) + '\n';
  out += "  average         " + fixed(r.meanRatio, 2) + '\n';
  out += "  geometric mean  " + fixed(r.geoMeanRatio, 2) + '\n';
  out += '\n';

  if (ctx.fScores) {
    out += "F-score of Good predictions per configuration\n";
    for (int c = 1; c <= HeuristicConfig::kCount; ++c) {
      out += "  " + pad(std::to_string(c), 2) + ' ' + HeuristicConfig::fromNumber(c).label() + "  " +
             fixed((*ctx.fScores)[static_cast<std::size_t>(c - 1)], 3) + '\n';
    }
    out += '\n';
  }

  out += "Cost totals (timeouts valued at budget " + formatDouble(r.budget) + ")\n";
  out += "            " + pad("sum", 14) + pad("average", 14) + pad("timeouts", 10) + '\n';
  out += "  learned   " + pad(fixed(r.learnedSum, 0), 14) + pad(fixed(r.learnedMean, 1), 14) +
         pad(std::to_string(r.learnedTimeouts), 10) + '\n';
  out += "  standard  " + pad(fixed(r.standardSum, 0), 14) + pad(fixed(r.standardMean, 1), 14) +
         pad(std::to_string(r.standardTimeouts), 10) + '\n';
  if (ctx.threshold) out += "\nGood/Bad threshold  " + fixed(*ctx.threshold, 1) + '\n';
  return out;
}

}  // namespace dlorder
