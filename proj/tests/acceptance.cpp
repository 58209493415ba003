// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <thread>

#include "dlorder/dag.hpp"
#include "dlorder/error.hpp"
#include "dlorder/experiment.hpp"
#include "dlorder/heuristics.hpp"
#include "dlorder/ml.hpp"
#include "dlorder/model.hpp"
#include "dlorder/oracle.hpp"
#include "dlorder/runtime.hpp"
#include "dlorder/selection.hpp"
#include "dlorder/tableau.hpp"
#include "support/ordering_checks.hpp"
#include "support/random_ontology.hpp"

using namespace dlorder;

namespace {

int failures = 0;

void verdict(int n, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

// A criterion that throws fails with the message.
void run(int n, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    verdict(n, false, std::string("exception: ") + e.what());
  }
}

std::string num(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

double seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

const std::array<double, 12> kAccuracy = {95, 83, 89, 89, 97, 91, 86, 82, 87, 93, 91, 84};

void thresholdArithmetic() {
  const std::vector<CostMoments> m = {{90670, 45240}, {77140, 38510}, {86330, 43199},  {67060, 33513},
                                      {81390, 40704}, {66890, 33428}, {126600, 63351}, {88000, 43993},
                                      {87680, 43876}, {68900, 34448}, {101960, 51013}, {74360, 37210}};
  auto t = thresholdFromMoments(m);
  verdict(1, std::abs(t - 127122) <= 1, "threshold " + num(t, 1) + " (want 127122 +- 1)");
}

void priorityArithmetic() {
  auto p = assignPriorities(kAccuracy);
  const PriorityTable want{2, 11, 6, 7, 1, 4, 9, 12, 8, 3, 5, 10};
  std::string got;
  for (auto v : p) got += (got.empty() ? "" : " ") + std::to_string(v);
  verdict(2, p == want, "priorities " + got + " (want 2 11 6 7 1 4 9 12 8 3 5 10)");
}

void selectionReplay() {
  // Runtime rows of samples 1 and 5; 0 marks a timeout.
  const double sample1[12] = {219016, 98874, 215667, 90479, 219501, 104240,
                              225228, 98056, 212528, 87984, 214417, 109944};
  const double sample5[12] = {0, 33833, 0, 28795, 0, 36608, 0, 0, 0, 22632, 0, 0};
  RuntimeTable t;
  t.timeoutBudget = 500000;
  auto add = [&](const std::string& id, const double* row) {
    for (int c = 1; c <= 12; ++c) {
      bool to = row[c - 1] == 0;
      t.rows.push_back({id, c, to ? 500000.0 : row[c - 1], to ? RunOutcome::Timeout : RunOutcome::Finished});
    }
  };
  add("sample1", sample1);
  add("sample5", sample5);
  auto data = labelExamples(t, 127122, {{"sample1", FeatureVector{}}, {"sample5", FeatureVector{}}});
  auto pri = assignPriorities(kAccuracy);
  int s1 = selectHeuristic(data.at(0).good, pri);
  int s5 = selectHeuristic(data.at(1).good, pri);
  int none = selectHeuristic({}, pri);
  verdict(3, s1 == 10 && s5 == 10 && none == 8,
          "sample 1 -> " + std::to_string(s1) + ", sample 5 -> " + std::to_string(s5) + ", all Bad -> " +
              std::to_string(none) + " (want 10, 10, 8)");
}

void tableauAgreement() {
  auto start = std::chrono::steady_clock::now();
  testing::RandomOntologies gen(2024, 4, 2);
  std::size_t ontologies = 250, checks = 0, disagreements = 0;
  for (std::size_t i = 0; i < ontologies; ++i) {
    auto o = gen.ontology(1 + gen.below(4));
    auto dag = std::make_shared<const Dag>(encodeDag(o));
    for (const auto& [name, id] : dag->atoms()) {
      bool expected = bruteForceSatisfiable(o, Concept::atomic(name), 3);
      for (int n = 0; n <= 12; ++n) {
        auto cfg = n == 0 ? MaybeConfig{} : MaybeConfig{HeuristicConfig::fromNumber(n)};
        auto r = isSatisfiable(applyOrdering(dag, cfg), {id, false}, 2'000'000);
        ++checks;
        if (r.outcome == SatOutcome::BudgetExceeded || (r.outcome == SatOutcome::Satisfiable) != expected) {
          ++disagreements;
        }
      }
    }
  }
  double s = seconds(start);
  verdict(4, disagreements == 0 && checks > 0 && s < 60,
          std::to_string(ontologies) + " ontologies, " + std::to_string(checks) + " class/config checks, " +
              std::to_string(disagreements) + " disagreements, " + num(s, 1) + " s");
}

void orderingInvariants() {
  testing::RandomOntologies gen(77, 6, 2);
  std::mt19937_64 rng(5);
  std::size_t pairs = 0, violations = 0;
  std::string first;
  while (pairs < 1000) {
    auto d = std::make_shared<const Dag>(encodeDag(gen.ontology(2 + gen.below(8))));
    std::vector<VertexId> ands;
    for (VertexId v = 0; v < d->size(); ++v) {
      if (d->vertex(v).op == VertexOp::And && d->vertex(v).children.size() > 1) ands.push_back(v);
    }
    if (ands.empty()) continue;
    for (int k = 0; k < 10 && pairs < 1000; ++k, ++pairs) {
      auto v = ands[rng() % ands.size()];
      auto cfg = HeuristicConfig::fromNumber(static_cast<int>(1 + rng() % 12));
      auto found = testing::orderingViolations(applyOrdering(d, cfg), v);
      violations += found.size();
      if (!found.empty() && first.empty()) first = " (first: " + found.front() + ")";
    }
  }
  verdict(5, violations == 0,
          std::to_string(pairs) + " (vertex, config) pairs, " + std::to_string(violations) + " violations" + first);
}

void mlOracles() {
  std::string detail;
  bool ok = true;

  Matrix line;
  for (double x : {-2.0, -1.0, 0.5, 3.0, 4.0}) line.push_back({x, 2 * x});
  auto pca = pcaFit(line, 1);
  double dirErr = std::max(std::abs(pca.components[0][0] - 1 / std::sqrt(5.0)),
                           std::abs(pca.components[0][1] - 2 / std::sqrt(5.0)));
  double evr = pca.explainedVarianceRatio(0);
  ok = ok && dirErr < 1e-6 && std::abs(evr - 1) < 1e-9;
  detail += "PCA direction error " + num(dirErr, 12) + ", explained " + num(100 * evr, 6) + "%; ";

  Matrix xor4 = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  Labels xorY = {0, 0, 1, 1};
  auto svm = svmTrain(xor4, xorY, KernelType::Rbf, 10, 1);
  int right = 0;
  for (std::size_t i = 0; i < 4; ++i) right += svmPredict(svm, xor4[i]) == xorY[i];
  ok = ok && right == 4;
  detail += "XOR " + std::to_string(right) + "/4; ";

  double mi = mutualInformation({0, 1, 0, 1, 0, 1}, {0, 1, 0, 1, 0, 1}, 2);
  ok = ok && std::abs(mi - 1) < 1e-9;
  detail += "MI " + num(mi, 12) + " bit; ";

  // Canary column equals the label in validation rows only.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  std::size_t n = 300;
  Matrix x;
  Labels y;
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back({u(rng), u(rng), u(rng), 0});
    y.push_back(static_cast<int>(rng() % 2));
  }
  auto fold = stratifiedFolds(y, 10, 2);
  double worst = 0;
  for (auto kernel : {KernelType::Linear, KernelType::Rbf}) {
    double sum = 0;
    for (std::size_t f = 0; f < 10; ++f) {
      Matrix tr, va;
      Labels trl, val;
      for (std::size_t i = 0; i < n; ++i) {
        auto row = x[i];
        if (fold[i] == f) {
          row[3] = y[i];
          va.push_back(row);
          val.push_back(y[i]);
        } else {
          row[3] = static_cast<double>(rng() % 2);
          tr.push_back(row);
          trl.push_back(y[i]);
        }
      }
      sum += evaluateSplit(tr, trl, va, val, {4, 0, kernel, 1, 0});
    }
    worst = std::max(worst, sum / 10);
  }
  ok = ok && worst <= 0.5 + 0.15;
  detail += "canary CV accuracy " + num(worst, 3) + " (limit 0.65)";
  verdict(6, ok, detail);
}

bool hasAll(const std::string& text, std::initializer_list<const char*> needles, std::string& missing) {
  for (auto* n : needles) {
    if (text.find(n) == std::string::npos) {
      missing = n;
      return false;
    }
  }
  return true;
}

void reportStatistics(const ExperimentResult& r) {
  std::string missing;
  bool ok = hasAll(r.reportText,
                   {"Runtimes per configuration", "maximum", "average", "geometric mean",
                    "F-score of Good predictions", "Cost totals", "sum", "timeouts"},
                   missing);
  // and for a corpus of one, built by hand
  RuntimeTable learned, standard, all;
  learned.rows.push_back({"x", 3, 40, RunOutcome::Finished});
  standard.rows.push_back({"x", 1, 400, RunOutcome::Timeout});
  for (int c = 1; c <= 12; ++c) all.rows.push_back({"x", c, 10.0 * c, RunOutcome::Finished});
  ReportContext ctx;
  ctx.runtimes = &all;
  ctx.fScores = std::array<double, 12>{};
  auto tiny = renderReport(speedupReport(learned, standard, 400), ctx);
  ok = ok && hasAll(tiny, {"maximum         10.00", "geometric mean  10.00", "F-score", "learned", "standard"},
                    missing);
  verdict(9, ok, ok ? "report emits per-config runtimes, max/average/geometric-mean speedup, F-scores, cost sums"
                    : "report lacks '" + missing + "'");
}

}  // namespace

int main() {
  run(1, thresholdArithmetic);
  run(2, priorityArithmetic);
  run(3, selectionReplay);
  run(4, tableauAgreement);
  run(5, orderingInvariants);
  run(6, mlOracles);

  std::optional<ExperimentResult> first;
  run(7, [&] {
    auto start = std::chrono::steady_clock::now();
    ExperimentOptions opt;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    opt.bench.threads = hw;
    opt.train.threads = hw;
    first = runExperiment(opt);
    double s = seconds(start);
    const auto& r = *first;
    auto eligible = r.filter.kept.ids();
    std::size_t sensitive = 0;
    for (const auto& e : r.corpus) {
      if (isOrderingSensitive(e.family) && std::find(eligible.begin(), eligible.end(), e.id) != eligible.end()) {
        ++sensitive;
      }
    }
    double share = eligible.empty() ? 0 : static_cast<double>(sensitive) / eligible.size();
    const auto& rep = r.report;
    bool ok = eligible.size() >= 120 && share >= 0.4 && rep.geoMeanRatio >= 2 &&
              rep.learnedTimeouts < rep.standardTimeouts && s < 600;
    verdict(7, ok,
            std::to_string(eligible.size()) + " eligible, " + num(100 * share, 1) + "% ordering-sensitive, test " +
                std::to_string(rep.entries.size()) + ", geometric-mean speedup " + num(rep.geoMeanRatio) +
                ", timeouts learned " + std::to_string(rep.learnedTimeouts) + " vs standard " +
                std::to_string(rep.standardTimeouts) + ", " + num(s, 1) + " s");
  });

  run(8, [&] {
    if (!first) throw Error("criterion 7 produced no run to compare");
    ExperimentOptions opt;  // serial this time; output must not depend on it
    auto second = runExperiment(opt);
    bool runtimes = runtimeCsv(first->bench.runtimes) == runtimeCsv(second.bench.runtimes);
    bool model = serializeModelBundle(first->model) == serializeModelBundle(second.model);
    bool report = first->reportText == second.reportText;
    verdict(8, runtimes && model && report,
            std::string("runtime CSV ") + (runtimes ? "identical" : "differs") + ", model " +
                (model ? "identical" : "differs") + ", report " + (report ? "identical" : "differs"));
  });

  run(9, [&] {
    if (!first) throw Error("criterion 7 produced no report");
    reportStatistics(*first);
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
