#include "dlorder/experiment.hpp"

#include "dlorder/text_util.hpp"

namespace dlorder {

ExperimentResult runExperiment(const ExperimentOptions& options) {
  ExperimentResult r;
  r.corpus = generateCorpus(options.corpus);
  r.bench = runBenchmark(r.corpus, options.bench);
  r.filter = filterEligible(r.bench.runtimes, r.bench.runs);
  r.split = splitTrainTest(r.filter.kept.ids(), options.testFraction, options.seed);

  auto trainRuntimes = restrictTo(r.filter.kept, r.split.train);
  auto threshold = computeThreshold(trainRuntimes);
  auto data = labelExamples(trainRuntimes, threshold, r.bench.features);
  auto train = options.train;
  train.seed = options.seed;
  r.model = trainModelBundle(data, threshold, train);

  auto testRuntimes = restrictTo(r.filter.kept, r.split.test);
  auto testFeatures = restrictTo(r.bench.features, r.split.test);
  r.predictions = predictConfigs(r.model, testFeatures);
  r.learned = selectedRuntimes(testRuntimes, r.predictions);
  r.standard = restrictTo(r.bench.standard, r.split.test);
  r.report = speedupReport(r.learned, r.standard, static_cast<double>(options.bench.budget));

  ReportContext ctx;
  ctx.runtimes = &testRuntimes;
  ctx.fScores = configFScores(r.model, testRuntimes, testFeatures);
  ctx.threshold = threshold;
  r.reportText = renderReport(r.report, ctx);
  return r;
}

void writeExperiment(const std::filesystem::path& dir, const ExperimentResult& r) {
  writeCorpus(dir / "corpus", r.corpus);
  writeRuntimeCsv(dir / "runtimes.csv", r.bench.runtimes);
  writeRuntimeCsv(dir / "standard.csv", r.bench.standard);
  writeFeatureCsv(dir / "features.csv", r.bench.features);
  writeTextFile(dir / "excluded.csv", exclusionCsv(r.filter.excluded));
  writeRuntimeCsv(dir / "eligible.csv", r.filter.kept);
  writeRuntimeCsv(dir / "train.csv", restrictTo(r.filter.kept, r.split.train));
  writeRuntimeCsv(dir / "test.csv", restrictTo(r.filter.kept, r.split.test));
  saveModelBundle(dir / "model.json", r.model);
  writeTextFile(dir / "predictions.csv", predictionsCsv(r.predictions));
  writeRuntimeCsv(dir / "learned.csv", r.learned);
  writeTextFile(dir / "report.txt", r.reportText);
}

}  // namespace dlorder
