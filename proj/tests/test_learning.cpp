#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "dlorder/error.hpp"
#include "dlorder/ml.hpp"
#include "dlorder/model.hpp"
#include "dlorder/runtime.hpp"
#include "dlorder/selection.hpp"

using namespace dlorder;

namespace {

// Reference (mean, std) per config.
const std::array<CostMoments, 12> kReferenceMoments = {{{90670, 45240},
                                              {77140, 38510},
                                              {86330, 43199},
                                              {67060, 33513},
                                              {81390, 40704},
                                              {66890, 33428},
                                              {126600, 63351},
                                              {88000, 43993},
                                              {87680, 43876},
                                              {68900, 34448},
                                              {101960, 51013},
                                              {74360, 37210}}};

const std::array<double, 12> kReferenceAccuracy = {95, 83, 89, 89, 97, 91, 86, 82, 87, 93, 91, 84};

ConfigLabels goods(std::initializer_list<int> configs) {
  ConfigLabels g{};
  for (int c : configs) g[static_cast<std::size_t>(c - 1)] = true;
  return g;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

FeatureVector featuresOf(std::initializer_list<double> head) {
  FeatureVector f;
  std::size_t i = 0;
  for (double v : head) f.values[i++] = v;
  return f;
}

// Random 39-dim dataset whose label depends on feature 0 only.
std::pair<Matrix, Labels> separable(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  Matrix rows;
  Labels labels;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> r(kFeatureCount);
    for (auto& v : r) v = u(rng);
    int y = static_cast<int>(i % 2);
    r[0] = y ? 2 + u(rng) : -2 + u(rng);
    rows.push_back(r);
    labels.push_back(y);
  }
  return {rows, labels};
}

}  // namespace

TEST_CASE("threshold of the reference moments") {
  std::vector<CostMoments> m(kReferenceMoments.begin(), kReferenceMoments.end());
  const double row[12] = {135910, 115650, 129529, 100573, 122094, 100318,
                          189951, 131993, 131556, 103348, 152973, 111570};
  for (std::size_t i = 0; i < 12; ++i) CHECK(m[i].mean + m[i].std == doctest::Approx(row[i]));
  CHECK(std::abs(thresholdFromMoments(m) - 127122) <= 1);
}

TEST_CASE("threshold from a runtime table") {
  RuntimeTable t;
  for (int c = 1; c <= 12; ++c) {
    t.rows.push_back({"a", c, 10, RunOutcome::Finished});
    t.rows.push_back({"b", c, 20, RunOutcome::Finished});
    t.rows.push_back({"c", c, 1000, RunOutcome::Timeout});
  }
  // mean 15, population std 5; the timeout is ignored
  CHECK(computeThreshold(t) == doctest::Approx(20));

  RuntimeTable flat;
  for (int c = 1; c <= 12; ++c) {
    flat.rows.push_back({"a", c, 7, RunOutcome::Finished});
    flat.rows.push_back({"b", c, 7, RunOutcome::Finished});
  }
  CHECK(computeThreshold(flat) == 7);

  flat.rows.pop_back();
  CHECK_THROWS_AS(computeThreshold(flat), InsufficientData);
}

TEST_CASE("labels use cost <= threshold and finished runs") {
  RuntimeTable t;
  t.rows.push_back({"s1", 4, 90479, RunOutcome::Finished});
  t.rows.push_back({"s1", 5, 127122, RunOutcome::Finished});
  t.rows.push_back({"s1", 6, 127123, RunOutcome::Finished});
  t.rows.push_back({"s1", 7, 500000, RunOutcome::Timeout});
  t.rows.push_back({"s1", 8, 5, RunOutcome::Inconsistent});
  std::vector<FeatureRow> f = {{"s1", featuresOf({1})}};
  auto d = labelExamples(t, 127122, f);
  REQUIRE(d.size() == 1);
  CHECK(d[0].good[3]);
  CHECK(d[0].good[4]);
  CHECK_FALSE(d[0].good[5]);
  CHECK_FALSE(d[0].good[6]);
  CHECK_FALSE(d[0].good[7]);

  t.rows.push_back({"s2", 1, 1, RunOutcome::Finished});
  CHECK_THROWS_AS(labelExamples(t, 127122, f), MissingFeatures);
}

TEST_CASE("scaling costs and threshold together keeps every label") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> cost(1, 300000);
  RuntimeTable t;
  std::vector<FeatureRow> f;
  for (int i = 0; i < 20; ++i) {
    auto id = "o" + std::to_string(i);
    f.push_back({id, featuresOf({double(i)})});
    for (int c = 1; c <= 12; ++c) {
      bool to = cost(rng) % 7 == 0;
      t.rows.push_back({id, c, to ? 500000.0 : double(cost(rng)), to ? RunOutcome::Timeout : RunOutcome::Finished});
    }
  }
  auto th = computeThreshold(t);
  auto base = labelExamples(t, th, f);
  RuntimeTable scaled = t;
  for (auto& r : scaled.rows) r.cost *= 4;
  auto th4 = computeThreshold(scaled);
  CHECK(th4 == doctest::Approx(4 * th));
  auto other = labelExamples(scaled, th4, f);
  auto pri = assignPriorities(kReferenceAccuracy);
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(base[i].good == other[i].good);
    CHECK(selectHeuristic(base[i].good, pri) == selectHeuristic(other[i].good, pri));
  }
}

TEST_CASE("runtime CSV round trip") {
  RuntimeTable t;
  t.rows.push_back({"x", 1, 12.5, RunOutcome::Finished});
  t.rows.push_back({"x", 2, 400, RunOutcome::Timeout});
  t.rows.push_back({"y", 1, 3, RunOutcome::Inconsistent});
  auto back = parseRuntimeCsv(runtimeCsv(t));
  CHECK(back.rows == t.rows);
  CHECK(back.timeoutBudget == 400);
  CHECK_THROWS_AS(parseRuntimeCsv("id,config,cost\nx,1,2\n"), IoError);
  CHECK_THROWS_AS(parseRuntimeCsv("id,config,cost,outcome\nx,13,2,Finished\n"), IoError);
}

TEST_CASE("scaler") {
  auto s = fitScaler({{1}, {2}, {3}});
  CHECK(s.mean[0] == doctest::Approx(2));
  CHECK(s.std[0] == doctest::Approx(std::sqrt(2.0 / 3)));
  CHECK(applyScaler(s, {1})[0] == doctest::Approx(-1.2247).epsilon(1e-4));
  CHECK(applyScaler(s, {2})[0] == doctest::Approx(0));
  CHECK(applyScaler(s, {3})[0] == doctest::Approx(1.2247).epsilon(1e-4));

  auto c = fitScaler({{5}, {5}});
  CHECK(applyScaler(c, {5})[0] == 0);
  CHECK(applyScaler(c, {9})[0] == 0);

  auto z = fitScaler({{-1}, {1}});
  CHECK(std::abs(applyScaler(z, {-1})[0] + 1) < 1e-9);
  CHECK(std::abs(applyScaler(z, {1})[0] - 1) < 1e-9);
}

TEST_CASE("mutual information") {
  Labels y = {0, 1, 0, 1, 0, 1};
  CHECK(mutualInformation({3, 3, 3, 3, 3, 3}, y, 10) == doctest::Approx(0));
  CHECK(std::abs(mutualInformation({0, 1, 0, 1, 0, 1}, y, 2) - 1.0) < 1e-9);
  CHECK(std::abs(mutualInformationFromJoint({{0.5, 0}, {0, 0.5}}) - 1.0) < 1e-9);
  CHECK(mutualInformationFromJoint({{0.25, 0.25}, {0.25, 0.25}}) == doctest::Approx(0));
  CHECK_THROWS_AS(mutualInformation({1, 2}, {0, 1}, 1), ConfigError);
}

TEST_CASE("mutual information agrees with the entropy form") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 20 + rng() % 60;
    std::vector<double> col(n);
    Labels y(n);
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = static_cast<double>(rng() % 9);
      y[i] = static_cast<int>(rng() % 2);
    }
    // H(F) + H(C) - H(F,C) over the same bins, counted independently
    std::vector<double> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::pair<std::size_t, int>, double> joint;
    std::map<std::size_t, double> pf;
    std::map<int, double> pc;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t below = 0;
      for (double v : sorted) below += v < col[i];
      auto bin = below * 4 / n;
      joint[{bin, y[i]}] += 1.0 / n;
      pf[bin] += 1.0 / n;
      pc[y[i]] += 1.0 / n;
    }
    auto h = [](auto& m) {
      double s = 0;
      for (auto& [k, p] : m) s -= p * std::log2(p);
      return s;
    };
    CHECK(std::abs(mutualInformation(col, y, 4) - (h(pf) + h(pc) - h(joint))) < 1e-9);
  }
}

TEST_CASE("top-k selection") {
  CHECK(selectTopK({0.9, 0.1, 0.5}, 2) == std::vector<std::size_t>{0, 2});
  CHECK(selectTopK({0.3, 0.3, 0.3}, 1) == std::vector<std::size_t>{0});
  std::vector<double> s(39, 0.1);
  CHECK(selectTopK(s, 39).size() == 39);
}

TEST_CASE("PCA on a line") {
  Matrix rows;
  for (double x : {-2.0, -1.0, 0.5, 3.0, 4.0}) rows.push_back({x, 2 * x});
  auto b = pcaFit(rows, 1);
  CHECK(std::abs(b.components[0][0] - 1 / std::sqrt(5.0)) < 1e-9);
  CHECK(std::abs(b.components[0][1] - 2 / std::sqrt(5.0)) < 1e-9);
  CHECK(std::abs(b.explainedVarianceRatio(0) - 1.0) < 1e-9);
  CHECK_THROWS_AS(pcaFit({{1, 1}, {1, 1}}, 1), DegenerateData);
  CHECK_THROWS_AS(pcaFit(rows, 3), ConfigError);
}

TEST_CASE("PCA on isotropic data") {
  auto b = pcaFit({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2);
  CHECK(b.variances[0] == doctest::Approx(b.variances[1]));
  CHECK(std::abs(dot(b.components[0], b.components[0]) - 1) < 1e-9);
  CHECK(std::abs(dot(b.components[1], b.components[1]) - 1) < 1e-9);
  CHECK(std::abs(dot(b.components[0], b.components[1])) < 1e-9);
}

TEST_CASE("full PCA preserves distances") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0, 1);
  Matrix rows(12, std::vector<double>(5));
  for (auto& r : rows) {
    for (auto& v : r) v = g(rng);
  }
  auto b = pcaFit(rows, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(dot(b.components[i], b.components[j]) - (i == j)) < 1e-9);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      auto a = pcaTransform(b, rows[i]), c = pcaTransform(b, rows[j]);
      double d0 = 0, d1 = 0;
      for (std::size_t k = 0; k < 5; ++k) {
        d0 += (rows[i][k] - rows[j][k]) * (rows[i][k] - rows[j][k]);
        d1 += (a[k] - c[k]) * (a[k] - c[k]);
      }
      CHECK(std::abs(std::sqrt(d0) - std::sqrt(d1)) < 1e-9);
    }
  }
  for (std::size_t i = 1; i < b.variances.size(); ++i) CHECK(b.variances[i - 1] >= b.variances[i]);
}

TEST_CASE("SVM on two points") {
  auto m = svmTrain({{-1}, {1}}, {0, 1}, KernelType::Linear, 10);
  CHECK(std::abs(svmDecision(m, {0})) < 1e-3);
  CHECK(svmPredict(m, {-1}) == 0);
  CHECK(svmPredict(m, {1}) == 1);
  CHECK(svmDecision(m, {-0.01}) < 0);
  CHECK(svmDecision(m, {0.01}) > 0);
  CHECK_THROWS_AS(svmTrain({{1}, {2}}, {1, 1}, KernelType::Linear, 1), SingleClass);
}

TEST_CASE("RBF SVM separates XOR") {
  Matrix x = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  Labels y = {0, 0, 1, 1};
  auto m = svmTrain(x, y, KernelType::Rbf, 10, 1);
  for (std::size_t i = 0; i < 4; ++i) CHECK(svmPredict(m, x[i]) == y[i]);
  auto lin = svmTrain(x, y, KernelType::Linear, 10);
  int right = 0;
  for (std::size_t i = 0; i < 4; ++i) right += svmPredict(lin, x[i]) == y[i];
  CHECK(right < 4);
}

TEST_CASE("SVM dual satisfies KKT on random data") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g(0, 1);
  Matrix x;
  Labels y;
  for (int i = 0; i < 60; ++i) {
    x.push_back({g(rng), g(rng), g(rng)});
    y.push_back(x.back()[0] + 0.5 * g(rng) > 0);
  }
  for (auto kernel : {KernelType::Linear, KernelType::Rbf}) {
    auto m = svmTrain(x, y, kernel, 1, 0.5);
    double sum = 0;
    for (double c : m.coefficients) {
      CHECK(std::abs(c) <= 1 + 1e-9);
      sum += c;
    }
    CHECK(std::abs(sum) < 1e-9);
    // margin violators must sit at the bound; free vectors on the margin
    for (std::size_t i = 0; i < x.size(); ++i) {
      double yi = y[i] ? 1 : -1;
      double margin = yi * svmDecision(m, x[i]);
      double alpha = 0;
      for (std::size_t s = 0; s < m.supportVectors.size(); ++s) {
        if (m.supportVectors[s] == x[i]) alpha = std::abs(m.coefficients[s]);
      }
      if (alpha == 0) CHECK(margin >= 1 - 2e-3);
      else if (alpha >= 1 - 1e-9) CHECK(margin <= 1 + 2e-3);
      else CHECK(std::abs(margin - 1) <= 2e-3);
    }
  }
}

TEST_CASE("stratified folds keep class proportions") {
  Labels y;
  for (int i = 0; i < 53; ++i) y.push_back(i % 3 == 0);
  auto f = stratifiedFolds(y, 10, 9);
  CHECK(f == stratifiedFolds(y, 10, 9));
  std::array<int, 10> pos{}, all{};
  for (std::size_t i = 0; i < y.size(); ++i) {
    ++all[f[i]];
    pos[f[i]] += y[i];
  }
  for (int k = 0; k < 10; ++k) {
    CHECK(all[k] >= 5);
    CHECK(all[k] <= 6);
    CHECK(pos[k] >= 1);
    CHECK(pos[k] <= 2);
  }
}

TEST_CASE("cross-validation") {
  auto [x, y] = separable(80, 1);
  PipelineParams p{5, 0, KernelType::Linear, 10, 0};
  CHECK(crossValidate(x, y, p, 10, 4) == 1.0);
  CHECK(crossValidate(x, y, p, 10, 4) == crossValidate(x, y, p, 10, 4));

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0, 1);
  Matrix noise;
  Labels coin;
  for (int i = 0; i < 400; ++i) {
    noise.emplace_back(kFeatureCount);
    for (auto& v : noise.back()) v = u(rng);
    coin.push_back(i % 2);
  }
  auto acc = crossValidate(noise, coin, {10, 0, KernelType::Linear, 1, 0}, 10, 4);
  CHECK(acc == doctest::Approx(0.5).epsilon(0.2));
  CHECK(std::abs(acc - 0.5) <= 0.1);

  CHECK_THROWS_AS(crossValidate(Matrix(5, std::vector<double>(3, 0)), {0, 1, 0, 1, 0}, p, 10, 1), TooFewExamples);
}

TEST_CASE("validation folds do not leak into fitting") {
  // The canary column equals the label in validation rows and is noise in
  // training rows, so only a leaky pipeline could exploit it.
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
    CHECK(sum / 10 <= 0.5 + 0.15);
  }
}

TEST_CASE("grid expansion clamps to the data") {
  GridSpec g;
  auto full = expandGrid(g, 400, kFeatureCount, 10);
  // nc >= k means all components: (k,nc) pairs 2 + 3 + 4 + 4, each with 4 linear + 12 rbf
  CHECK(full.size() == 208);
  auto small = expandGrid(g, 12, kFeatureCount, 10);
  for (const auto& p : small) {
    CHECK(p.k >= 1);
    CHECK(p.k <= kFeatureCount);
    CHECK((p.nComponents == 0 || p.nComponents < std::min<std::size_t>(p.k, 9)));
  }
  CHECK(small.size() < full.size());
  GridSpec tiny;
  tiny.k = {50};
  tiny.nComponents = {0};
  tiny.kernels = {KernelType::Linear};
  tiny.C = {1};
  auto one = expandGrid(tiny, 100, kFeatureCount, 10);
  REQUIRE(one.size() == 1);
  CHECK(one[0].k == kFeatureCount);
}

TEST_CASE("grid search") {
  // label = |x| < 1: RBF separates it, a line cannot
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2, 2);
  Matrix x;
  Labels y;
  for (int i = 0; i < 60; ++i) {
    double v = u(rng);
    while (std::abs(std::abs(v) - 1) < 0.15) v = u(rng);
    x.push_back({v});
    y.push_back(std::abs(v) < 1);
  }
  PipelineParams lin{1, 0, KernelType::Linear, 10, 0};
  PipelineParams rbf{1, 0, KernelType::Rbf, 100, 1};
  auto r = gridSearch(x, y, {lin, rbf}, 10, 1);
  CHECK(r.params == rbf);
  CHECK(r.accuracy >= 0.95);
  auto single = gridSearch(x, y, {lin}, 10, 1);
  CHECK(single.params == lin);
  CHECK(gridSearch(x, y, {lin, rbf}, 10, 1).accuracy == r.accuracy);
  // equal points: the first wins
  auto tie = gridSearch(x, y, {rbf, rbf}, 10, 1);
  CHECK(tie.params == rbf);
  CHECK_THROWS_AS(gridSearch(x, y, {}, 10, 1), ConfigError);
}

TEST_CASE("pipeline falls back to a constant predictor") {
  auto p = fitPipeline({{1, 2}, {3, 4}, {5, 6}}, {1, 1, 0}, {2, 0, KernelType::Linear, 1, 0});
  CHECK(p.svm.has_value());
  auto single = fitPipeline({{1, 2}, {3, 4}}, {1, 1}, {2, 0, KernelType::Linear, 1, 0});
  CHECK_FALSE(single.svm.has_value());
  CHECK(single.predict({9, 9}) == 1);
  auto flat = fitPipeline({{1, 1}, {1, 1}, {1, 1}, {1, 1}}, {1, 0, 0, 1}, {2, 0, KernelType::Linear, 1, 0});
  CHECK_FALSE(flat.svm.has_value());
  CHECK(flat.predict({1, 1}) == 0);
}

TEST_CASE("priorities") {
  CHECK(assignPriorities(kReferenceAccuracy) == PriorityTable{2, 11, 6, 7, 1, 4, 9, 12, 8, 3, 5, 10});
  std::array<double, 12> same{};
  same.fill(0.8);
  CHECK(assignPriorities(same) == PriorityTable{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  std::array<double, 12> down{};
  for (int i = 0; i < 12; ++i) down[i] = 1 - 0.01 * i;
  CHECK(assignPriorities(down) == PriorityTable{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
}

TEST_CASE("heuristic selection") {
  auto pri = assignPriorities(kReferenceAccuracy);
  CHECK(selectHeuristic(goods({2, 4, 6, 10}), pri) == 10);
  CHECK(selectHeuristic(goods({2, 4, 6, 8, 10, 12}), pri) == 10);
  CHECK(selectHeuristic(goods({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}), pri) == 5);
  CHECK(selectHeuristic(goods({}), pri) == 8);
}

TEST_CASE("F-score") {
  CHECK(fScore({true, false, true}, {true, false, true}) == 1.0);
  CHECK(std::abs(fScore({true, true, false}, {true, false, false}) - 2.0 / 3) < 1e-9);
  CHECK(fScore({false, false}, {false, false}) == 0);
  CHECK_THROWS_AS(fScore({true}, {true, false}), MismatchedIds);
}

namespace {

LabeledDataset toyDataset(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 10);
  LabeledDataset d;
  for (std::size_t i = 0; i < n; ++i) {
    LabeledExample ex;
    ex.id = "t" + std::to_string(i);
    for (auto& v : ex.features.values) v = std::floor(u(rng));
    for (int c = 0; c < 12; ++c) ex.good[static_cast<std::size_t>(c)] = ex.features.values[static_cast<std::size_t>(c)] > 4 + (c % 3);
    d.push_back(ex);
  }
  return d;
}

TrainOptions smallGrid() {
  TrainOptions o;
  o.grid.k = {3, 39};
  o.grid.nComponents = {2, 0};
  o.grid.C = {1, 10};
  o.grid.gamma = {0};
  o.folds = 5;
  o.seed = 3;
  return o;
}

}  // namespace

TEST_CASE("model bundle training is deterministic and serializes exactly") {
  auto d = toyDataset(40, 12);
  auto opt = smallGrid();
  auto a = trainModelBundle(d, 1234.5, opt);
  opt.threads = 4;
  auto b = trainModelBundle(d, 1234.5, opt);
  auto text = serializeModelBundle(a);
  CHECK(text == serializeModelBundle(b));
  auto back = parseModelBundle(text);
  CHECK(back == a);
  CHECK(serializeModelBundle(back) == text);

  auto sorted = a.priority;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == PriorityTable{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  for (const auto& m : a.models) {
    const auto& comps = m.pipeline.pca.components;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (std::size_t j = 0; j < comps.size(); ++j) {
        CHECK(std::abs(dot(comps[i], comps[j]) - (i == j)) <= 1e-9);
      }
    }
    CHECK(m.cvAccuracy > 0.7);
  }
  for (const auto& ex : d) {
    CHECK(a.predict(ex.features) == back.predict(ex.features));
    CHECK(a.choose(ex.features) == back.choose(ex.features));
  }
}

TEST_CASE("model loading rejects damaged files") {
  auto a = trainModelBundle(toyDataset(20, 2), 10, smallGrid());
  auto text = serializeModelBundle(a);
  CHECK_THROWS_AS(parseModelBundle(text.substr(0, text.size() / 2)), CorruptModel);
  CHECK_THROWS_AS(parseModelBundle(""), CorruptModel);
  CHECK_THROWS_AS(parseModelBundle("{\"format\":\"dlorder-model\",\"version\":1}"), CorruptModel);
  auto future = text;
  auto pos = future.find("\"version\": 1");
  REQUIRE(pos != std::string::npos);
  future.replace(pos, 12, "\"version\": 99");
  CHECK_THROWS_AS(parseModelBundle(future), VersionMismatch);
  CHECK_THROWS_AS(trainModelBundle(toyDataset(3, 1), 1, smallGrid()), TooFewExamples);
}
