#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dlorder/bench.hpp"
#include "dlorder/model.hpp"
#include "dlorder/report.hpp"

namespace dlorder {

struct ExperimentOptions {
  CorpusSpec corpus;
  BenchOptions bench;
  double testFraction = 0.25;
  std::uint64_t seed = 1;  // split and training; the corpus has its own
  TrainOptions train;      // train.seed is replaced by `seed`
};

struct ExperimentResult {
  std::vector<CorpusEntry> corpus;
  BenchmarkResult bench;
  FilterResult filter;
  IdSplit split;
  ModelBundle model;
  std::vector<Prediction> predictions;  // test ontologies
  RuntimeTable learned;                 // test rows of the predicted configs
  RuntimeTable standard;                // test rows of the default configs
  SpeedupReport report;
  std::string reportText;
};

// generate -> benchmark -> filter -> split -> train on the training part
// (threshold included) -> predict the test part -> report.
ExperimentResult runExperiment(const ExperimentOptions& options);

// corpus/, runtimes.csv, standard.csv, features.csv, excluded.csv,
// eligible.csv, train.csv, test.csv, model.json, predictions.csv, learned.csv,
// report.txt
void writeExperiment(const std::filesystem::path& dir, const ExperimentResult& r);

}  // namespace dlorder
