#include "dlorder/model.hpp"

#include <json.hpp>
#include <thread>

#include "dlorder/error.hpp"
#include "dlorder/text_util.hpp"

namespace dlorder {

using nlohmann::json;

ConfigLabels ModelBundle::predict(const FeatureVector& f) const {
  ConfigLabels out{};
  std::vector<double> x(f.values.begin(), f.values.end());
  for (const auto& m : models) out[static_cast<std::size_t>(m.config - 1)] = m.pipeline.predict(x) == 1;
  return out;
}

int ModelBundle::choose(const FeatureVector& f) const { return selectHeuristic(predict(f), priority); }

ModelBundle trainModelBundle(const LabeledDataset& data, double threshold, const TrainOptions& options) {
  if (data.size() < options.folds) {
    throw TooFewExamples(std::to_string(data.size()) + " labelled ontologies; " + std::to_string(options.folds) +
                         " folds need at least as many");
  }
  Matrix rows;
  for (const auto& ex : data) rows.emplace_back(ex.features.values.begin(), ex.features.values.end());
  auto grid = expandGrid(options.grid, rows.size(), kFeatureCount, options.folds);

  ModelBundle b;
  b.seed = options.seed;
  b.threshold = threshold;
  b.models.resize(HeuristicConfig::kCount);

  auto trainOne = [&](int config) {
    Labels labels;
    for (const auto& ex : data) labels.push_back(ex.good[static_cast<std::size_t>(config - 1)] ? 1 : 0);
    auto best = gridSearch(rows, labels, grid, options.folds, options.seed);
    auto& m = b.models[static_cast<std::size_t>(config - 1)];
    m.config = config;
    m.cvAccuracy = best.accuracy;
    m.pipeline = fitPipeline(rows, labels, best.params);
  };

  auto threads = std::max(1u, std::min<unsigned>(options.threads, HeuristicConfig::kCount));
  if (threads == 1) {
    for (int c = 1; c <= HeuristicConfig::kCount; ++c) trainOne(c);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int c = static_cast<int>(t) + 1; c <= HeuristicConfig::kCount; c += static_cast<int>(threads)) trainOne(c);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::array<double, HeuristicConfig::kCount> acc{};
  for (const auto& m : b.models) acc[static_cast<std::size_t>(m.config - 1)] = m.cvAccuracy;
  b.priority = assignPriorities(acc);
  return b;
}

// ---- serialization

namespace {

std::string kernelName(KernelType k) { return k == KernelType::Linear ? "linear" : "rbf"; }

KernelType kernelFromName(const std::string& s) {
  if (s == "linear") return KernelType::Linear;
  if (s == "rbf") return KernelType::Rbf;
  throw CorruptModel("unknown kernel '" + s + "'");
}

json toJson(const Pipeline& p) {
  json j;
  j["params"] = {{"k", p.params.k},
                 {"nComponents", p.params.nComponents},
                 {"kernel", kernelName(p.params.kernel)},
                 {"C", p.params.C},
                 {"gamma", p.params.gamma}};
  j["selectedFeatureIndices"] = p.selected;
  j["scaler"] = {{"mean", p.scaler.mean}, {"std", p.scaler.std}};
  j["pca"] = {{"mean", p.pca.mean},
              {"components", p.pca.components},
              {"variances", p.pca.variances},
              {"totalVariance", p.pca.totalVariance}};
  if (p.svm) {
    const auto& s = *p.svm;
    j["svm"] = {{"kernel", kernelName(s.kernel)},
                {"gamma", s.gamma},
                {"C", s.C},
                {"supportVectors", s.supportVectors},
                {"coefficients", s.coefficients},
                {"bias", s.bias},
                {"iterations", s.iterations}};
  } else {
    j["svm"] = nullptr;
  }
  j["constantLabel"] = p.constantLabel;
  return j;
}

Pipeline pipelineFromJson(const json& j) {
  Pipeline p;
  const auto& params = j.at("params");
  p.params.k = params.at("k").get<std::size_t>();
  p.params.nComponents = params.at("nComponents").get<std::size_t>();
  p.params.kernel = kernelFromName(params.at("kernel").get<std::string>());
  p.params.C = params.at("C").get<double>();
  p.params.gamma = params.at("gamma").get<double>();
  p.selected = j.at("selectedFeatureIndices").get<std::vector<std::size_t>>();
  p.scaler.mean = j.at("scaler").at("mean").get<std::vector<double>>();
  p.scaler.std = j.at("scaler").at("std").get<std::vector<double>>();
  const auto& pca = j.at("pca");
  p.pca.mean = pca.at("mean").get<std::vector<double>>();
  p.pca.components = pca.at("components").get<Matrix>();
  p.pca.variances = pca.at("variances").get<std::vector<double>>();
  p.pca.totalVariance = pca.at("totalVariance").get<double>();
  const auto& svm = j.at("svm");
  if (!svm.is_null()) {
    SvmModel s;
    s.kernel = kernelFromName(svm.at("kernel").get<std::string>());
    s.gamma = svm.at("gamma").get<double>();
    s.C = svm.at("C").get<double>();
    s.supportVectors = svm.at("supportVectors").get<Matrix>();
    s.coefficients = svm.at("coefficients").get<std::vector<double>>();
    s.bias = svm.at("bias").get<double>();
    s.iterations = svm.at("iterations").get<std::size_t>();
    if (s.coefficients.size() != s.supportVectors.size()) throw CorruptModel("support vector count mismatch");
    p.svm = std::move(s);
  }
  p.constantLabel = j.at("constantLabel").get<int>();
  for (auto idx : p.selected) {
    if (idx >= kFeatureCount) throw CorruptModel("feature index out of range");
  }
  if (p.svm && (p.scaler.mean.size() != p.selected.size() || p.scaler.std.size() != p.selected.size() ||
                p.pca.mean.size() != p.selected.size())) {
    throw CorruptModel("pipeline dimensions disagree");
  }
  for (const auto& c : p.pca.components) {
    if (c.size() != p.pca.mean.size()) throw CorruptModel("PCA component has wrong dimension");
  }
  return p;
}

}  // namespace

std::string serializeModelBundle(const ModelBundle& b) {
  json j;
  j["format"] = "dlorder-model";
  j["version"] = b.version;
  j["seed"] = b.seed;
  j["threshold"] = b.threshold;
  j["priority"] = b.priority;
  j["featureNames"] = json::array();
  for (auto n : featureNames()) j["featureNames"].push_back(std::string(n));
  j["models"] = json::array();
  for (const auto& m : b.models) {
    j["models"].push_back({{"config", m.config},
                           {"label", HeuristicConfig::fromNumber(m.config).label()},
                           {"cvAccuracy", m.cvAccuracy},
                           {"pipeline", toJson(m.pipeline)}});
  }
  return j.dump(1) + "\n";
}

ModelBundle parseModelBundle(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw CorruptModel(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("format", "") != "dlorder-model") throw CorruptModel("not a model bundle");
    auto version = j.at("version").get<int>();
    if (version != kModelVersion) {
      throw VersionMismatch("model version " + std::to_string(version) + " is not supported (expected " +
                            std::to_string(kModelVersion) + ")");
    }
    ModelBundle b;
    b.version = version;
    b.seed = j.at("seed").get<std::uint64_t>();
    b.threshold = j.at("threshold").get<double>();
    b.priority = j.at("priority").get<PriorityTable>();
    auto names = j.at("featureNames").get<std::vector<std::string>>();
    if (names.size() != kFeatureCount) throw CorruptModel("feature list has the wrong length");
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      if (names[i] != featureNames()[i]) throw CorruptModel("feature '" + names[i] + "' out of order");
    }
    std::array<bool, HeuristicConfig::kCount> seen{};
    for (const auto& m : j.at("models")) {
      ConfigModel cm;
      cm.config = m.at("config").get<int>();
      if (cm.config < 1 || cm.config > HeuristicConfig::kCount || seen[cm.config - 1]) {
        throw CorruptModel("bad config number in model list");
      }
      seen[cm.config - 1] = true;
      cm.cvAccuracy = m.at("cvAccuracy").get<double>();
      cm.pipeline = pipelineFromJson(m.at("pipeline"));
      b.models.push_back(std::move(cm));
    }
    if (b.models.size() != HeuristicConfig::kCount) throw CorruptModel("model list must cover all 12 configs");
    auto sorted = b.priority;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < HeuristicConfig::kCount; ++i) {
      if (sorted[i] != i + 1) throw CorruptModel("priorities are not a permutation of 1..12");
    }
    return b;
  } catch (const json::exception& e) {
    throw CorruptModel(std::string("model file is malformed: ") + e.what());
  }
}

void saveModelBundle(const std::filesystem::path& path, const ModelBundle& b) {
  writeTextFile(path, serializeModelBundle(b));
}

ModelBundle loadModelBundle(const std::filesystem::path& path) { return parseModelBundle(readTextFile(path)); }

}  // namespace dlorder
