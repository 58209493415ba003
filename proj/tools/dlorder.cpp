#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "dlorder/bench.hpp"
#include "dlorder/dag.hpp"
#include "dlorder/error.hpp"
#include "dlorder/experiment.hpp"
#include "dlorder/features.hpp"
#include "dlorder/heuristics.hpp"
#include "dlorder/krss.hpp"
#include "dlorder/model.hpp"
#include "dlorder/report.hpp"
#include "dlorder/runtime.hpp"
#include "dlorder/tableau.hpp"
#include "dlorder/text_util.hpp"

using namespace dlorder;

namespace {

struct Loaded {
  Ontology ontology;
  std::shared_ptr<const Dag> dag;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.ontology = parseOntology(readTextFile(path));
  l.dag = std::make_shared<const Dag>(encodeDag(l.ontology));
  return l;
}

// "default" picks defaultConfig from the ontology's features.
MaybeConfig resolveConfig(const std::string& arg, const Loaded& l, const DefaultConfigThresholds& t) {
  if (arg == "default") return defaultConfig(extractFeatures(l.ontology, *l.dag), t);
  return parseConfigArgument(arg);
}

VertexRef classRef(const Dag& d, const std::string& name) {
  auto id = d.atom(name);
  if (!id) throw ConfigError("class '" + name + "' does not occur in the ontology");
  return {*id, false};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    writeTextFile(path, text);
  }
}

std::vector<FeatureRow> featureRows(const std::vector<std::string>& ontologies, const std::string& corpusDir) {
  std::vector<FeatureRow> rows;
  if (!corpusDir.empty()) {
    for (const auto& e : readCorpus(corpusDir)) {
      auto o = parseOntology(e.text);
      rows.emplace_back(e.id, extractFeatures(o, encodeDag(o)));
    }
  }
  for (const auto& p : ontologies) {
    auto l = load(p);
    rows.emplace_back(std::filesystem::path(p).stem().string(), extractFeatures(l.ontology, *l.dag));
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expansion-ordering selection for ALC tableau reasoning"};
  app.require_subcommand(1);

  DefaultConfigThresholds thresholds;
  auto addThresholds = [&](CLI::App* cmd) {
    cmd->add_option("--galen-gci-threshold", thresholds.galenGciThreshold, "GCIs above which defaultConfig picks Fdn");
    cmd->add_option("--galen-abox-threshold", thresholds.galenAboxThreshold, "instance cap for the Fdn rule");
  };

  // sat
  std::string ontologyPath, configArg = "0", className;
  std::uint64_t budget = 100000;
  auto* sat = app.add_subcommand("sat", "satisfiability of one class (or consistency without --class)");
  sat->add_option("--ontology", ontologyPath, "KRSS file")->required();
  sat->add_option("--config", configArg, "Mop label, 1..12, 0 (no sorting) or default");
  sat->add_option("--budget", budget, "step budget");
  sat->add_option("--class", className, "named class to test");
  addThresholds(sat);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "consistency check then every named class, as CSV");
  sweep->add_option("--ontology", ontologyPath, "KRSS file")->required();
  sweep->add_option("--config", configArg, "Mop label, 1..12, 0 or default");
  sweep->add_option("--budget", budget, "step budget for the whole sweep");
  addThresholds(sweep);

  // features
  std::vector<std::string> ontologyPaths;
  std::string corpusDir, outPath;
  auto* features = app.add_subcommand("features", "feature vectors as CSV");
  features->add_option("--ontology", ontologyPaths, "KRSS file (repeatable)");
  features->add_option("--corpus", corpusDir, "directory of .krss files");
  features->add_option("--out", outPath, "output CSV (default stdout)");

  // dag
  auto* dagCmd = app.add_subcommand("dag", "DAG encoding dump");
  dagCmd->add_option("--ontology", ontologyPath, "KRSS file")->required();
  dagCmd->add_option("--config", configArg, "also print the child order of And vertices under this config");
  addThresholds(dagCmd);

  // gen-corpus
  std::string specPath;
  auto* gen = app.add_subcommand("gen-corpus", "generate a synthetic corpus");
  gen->add_option("--spec", specPath, "corpus spec JSON (defaults when omitted)");
  gen->add_option("--out", outPath, "output directory")->required();

  // bench
  std::string standardOut, featuresOut, mode = "steps";
  std::size_t repeats = BenchOptions{}.repeats;
  unsigned threads = 1;
  std::uint64_t stepLimit = BenchOptions{}.stepLimit;
  auto* bench = app.add_subcommand("bench", "run every config on every ontology");
  bench->add_option("--corpus", corpusDir, "directory of .krss files")->required();
  bench->add_option("--budget", budget, "step budget (ms in wall mode)");
  bench->add_option("--out", outPath, "runtime CSV")->required();
  bench->add_option("--standard-out", standardOut, "runtime CSV of the default config per ontology");
  bench->add_option("--features-out", featuresOut, "feature CSV of the corpus");
  bench->add_option("--mode", mode, "steps or wall")->check(CLI::IsMember({"steps", "wall"}));
  bench->add_option("--repeats", repeats, "wall mode: measurements per pair, written as <out>.repN.csv");
  bench->add_option("--step-limit", stepLimit, "wall mode: step cap per sweep");
  bench->add_option("--threads", threads, "worker threads");
  addThresholds(bench);

  // filter
  std::vector<std::string> runtimePaths, repeatPaths;
  std::string logPath;
  double closeness = 0.05;
  auto* filter = app.add_subcommand("filter", "drop ineligible ontologies");
  filter->add_option("--runtimes", runtimePaths, "runtime CSV")->required()->expected(1);
  filter->add_option("--repeat", repeatPaths, "repeated measurement CSV (repeatable)");
  filter->add_option("--out", outPath, "kept rows")->required();
  filter->add_option("--log", logPath, "exclusion log CSV");
  filter->add_option("--closeness", closeness, "relative spread below which extremes must be stable");

  // split
  std::string runtimesPath, featuresPath, outDir;
  std::uint64_t seed = 1;
  double fraction = 0.25;
  auto* split = app.add_subcommand("split", "seeded train/test split by ontology");
  split->add_option("--runtimes", runtimesPath, "runtime CSV")->required();
  split->add_option("--features", featuresPath, "feature CSV, split alongside");
  split->add_option("--seed", seed, "shuffle seed");
  split->add_option("--fraction", fraction, "test fraction");
  split->add_option("--out-dir", outDir, "writes train.csv, test.csv and *_features.csv")->required();

  // train
  std::size_t folds = 10;
  auto* train = app.add_subcommand("train", "fit one classifier per config");
  train->add_option("--features", featuresPath, "feature CSV")->required();
  train->add_option("--runtimes", runtimesPath, "training runtime CSV")->required();
  train->add_option("--seed", seed, "fold seed");
  train->add_option("--folds", folds, "cross-validation folds");
  train->add_option("--threads", threads, "configs trained at once");
  train->add_option("--out", outPath, "model file")->required();

  // predict
  std::string modelPath;
  auto* predict = app.add_subcommand("predict", "choose a config per ontology");
  predict->add_option("--features", featuresPath, "feature CSV")->required();
  predict->add_option("--model", modelPath, "model file")->required();
  predict->add_option("--out", outPath, "output CSV (default stdout)");

  // report
  std::string learnedPath, predictionsPath;
  auto* report = app.add_subcommand("report", "speedup of learned selection over the default config");
  report->add_option("--learned", learnedPath, "runtime CSV of the chosen configs");
  report->add_option("--predictions", predictionsPath, "predictions CSV, resolved against --runtimes");
  report->add_option("--standard", standardOut, "runtime CSV of the default configs")->required();
  report->add_option("--budget", budget, "value of a timeout")->required();
  report->add_option("--runtimes", runtimesPath, "all configs' runtimes, for the per-config table");
  report->add_option("--model", modelPath, "model, for F-scores (needs --runtimes and --features)");
  report->add_option("--features", featuresPath, "feature CSV");
  report->add_option("--out", outPath, "report file (default stdout)");

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "generate, benchmark, filter, split, train, predict, report");
  pipeline->add_option("--spec", specPath, "corpus spec JSON (defaults when omitted)");
  pipeline->add_option("--budget", budget, "step budget per sweep");
  pipeline->add_option("--seed", seed, "split and training seed");
  pipeline->add_option("--threads", threads, "worker threads");
  pipeline->add_option("--out", outDir, "output directory")->required();
  addThresholds(pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sat) {
      auto l = load(ontologyPath);
      auto od = applyOrdering(l.dag, resolveConfig(configArg, l, thresholds));
      auto r = className.empty() ? checkTBoxConsistency(od, budget) : isSatisfiable(od, classRef(*l.dag, className), budget);
      std::cout << toText(r.outcome) << ' ' << r.steps << ' ' << r.branchPoints << '\n';
    } else if (*sweep) {
      auto l = load(ontologyPath);
      auto s = satisfiabilitySweep(applyOrdering(l.dag, resolveConfig(configArg, l, thresholds)), budget, budget);
      std::cout << "class,outcome,steps\n";
      std::cout << "*top*," << toText(s.consistency.outcome) << ',' << s.consistency.steps << '\n';
      for (const auto& [name, r] : s.perClass) std::cout << name << ',' << toText(r.outcome) << ',' << r.steps << '\n';
    } else if (*features) {
      if (ontologyPaths.empty() && corpusDir.empty()) throw ConfigError("features needs --ontology or --corpus");
      emit(outPath, featureCsv(featureRows(ontologyPaths, corpusDir)));
    } else if (*dagCmd) {
      auto l = load(ontologyPath);
      std::cout << l.dag->dump();
      auto cfg = resolveConfig(configArg, l, thresholds);
      if (cfg) {
        auto od = applyOrdering(l.dag, cfg);
        std::cout << "order " << configLabel(cfg) << '\n';
        for (VertexId v = 0; v < l.dag->size(); ++v) {
          if (l.dag->vertex(v).op != VertexOp::And) continue;
          std::cout << v;
          for (auto i : od.permutation(v)) std::cout << ' ' << i;
          std::cout << '\n';
        }
      }
    } else if (*gen) {
      auto spec = specPath.empty() ? CorpusSpec{} : loadCorpusSpec(specPath);
      auto corpus = generateCorpus(spec);
      writeCorpus(outPath, corpus);
      std::size_t crafted = 0;
      for (const auto& e : corpus) crafted += isOrderingSensitive(e.family);
      std::cerr << corpus.size() << " ontologies (" << crafted << " ordering-sensitive) written to " << outPath << '\n';
    } else if (*bench) {
      BenchOptions opt;
      opt.budget = budget;
      opt.mode = mode == "wall" ? CostMode::WallClock : CostMode::Steps;
      opt.repeats = repeats;
      opt.stepLimit = stepLimit;
      opt.threads = threads;
      opt.defaults = thresholds;
      auto r = runBenchmark(readCorpus(corpusDir), opt);
      writeRuntimeCsv(outPath, r.runtimes);
      if (r.runs.size() > 1) {
        auto stem = std::filesystem::path(outPath);
        for (std::size_t i = 0; i < r.runs.size(); ++i) {
          auto p = stem;
          p.replace_extension(".rep" + std::to_string(i + 1) + ".csv");
          writeRuntimeCsv(p, r.runs[i]);
        }
      }
      if (!standardOut.empty()) writeRuntimeCsv(standardOut, r.standard);
      if (!featuresOut.empty()) writeFeatureCsv(featuresOut, r.features);
      for (const auto& f : r.failures) std::cerr << "skipped " << f.id << ": " << f.message << '\n';
    } else if (*filter) {
      std::vector<RuntimeTable> reps;
      for (const auto& p : repeatPaths) reps.push_back(readRuntimeCsv(p));
      auto r = filterEligible(readRuntimeCsv(runtimePaths.front()), reps, closeness);
      writeRuntimeCsv(outPath, r.kept);
      if (!logPath.empty()) writeTextFile(logPath, exclusionCsv(r.excluded));
      std::cerr << r.kept.ids().size() << " kept, " << r.excluded.size() << " excluded\n";
    } else if (*split) {
      auto t = readRuntimeCsv(runtimesPath);
      auto s = splitTrainTest(t.ids(), fraction, seed);
      std::filesystem::path dir(outDir);
      writeRuntimeCsv(dir / "train.csv", restrictTo(t, s.train));
      writeRuntimeCsv(dir / "test.csv", restrictTo(t, s.test));
      if (!featuresPath.empty()) {
        auto f = readFeatureCsv(featuresPath);
        writeFeatureCsv(dir / "train_features.csv", restrictTo(f, s.train));
        writeFeatureCsv(dir / "test_features.csv", restrictTo(f, s.test));
      }
      std::cerr << s.train.size() << " train, " << s.test.size() << " test\n";
    } else if (*train) {
      auto t = readRuntimeCsv(runtimesPath);
      auto threshold = computeThreshold(t);
      auto data = labelExamples(t, threshold, readFeatureCsv(featuresPath));
      TrainOptions opt;
      opt.seed = seed;
      opt.folds = folds;
      opt.threads = threads;
      saveModelBundle(outPath, trainModelBundle(data, threshold, opt));
    } else if (*predict) {
      auto model = loadModelBundle(modelPath);
      emit(outPath, predictionsCsv(predictConfigs(model, readFeatureCsv(featuresPath))));
    } else if (*report) {
      std::optional<RuntimeTable> all;
      if (!runtimesPath.empty()) all = readRuntimeCsv(runtimesPath);
      RuntimeTable learned;
      if (!learnedPath.empty()) {
        learned = readRuntimeCsv(learnedPath);
      } else if (!predictionsPath.empty() && all) {
        learned = selectedRuntimes(*all, parsePredictionsCsv(readTextFile(predictionsPath)));
      } else {
        throw ConfigError("report needs --learned, or --predictions with --runtimes");
      }
      auto ids = learned.ids();
      auto standard = restrictTo(readRuntimeCsv(standardOut), ids);
      auto rep = speedupReport(learned, standard, static_cast<double>(budget));
      ReportContext ctx;
      RuntimeTable scoped;
      if (all) {
        scoped = restrictTo(*all, ids);
        ctx.runtimes = &scoped;
      }
      if (!modelPath.empty()) {
        if (!all || featuresPath.empty()) throw ConfigError("F-scores need --runtimes and --features with --model");
        auto model = loadModelBundle(modelPath);
        ctx.fScores = configFScores(model, scoped, restrictTo(readFeatureCsv(featuresPath), ids));
        ctx.threshold = model.threshold;
      }
      emit(outPath, renderReport(rep, ctx));
    } else if (*pipeline) {
      ExperimentOptions opt;
      if (!specPath.empty()) opt.corpus = loadCorpusSpec(specPath);
      opt.bench.budget = budget;
      opt.bench.threads = threads;
      opt.bench.defaults = thresholds;
      opt.train.threads = threads;
      opt.seed = seed;
      auto r = runExperiment(opt);
      writeExperiment(outDir, r);
      std::cout << r.reportText;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
