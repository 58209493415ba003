#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace dlorder {

// Row-major sample matrix.
using Matrix = std::vector<std::vector<double>>;
// Binary labels: 1 = Good (positive class), 0 = Bad.
using Labels = std::vector<int>;

// ---- standardization

struct Scaler {
  std::vector<double> mean;
  std::vector<double> std;  // population; 0 for constant columns

  friend bool operator==(const Scaler&, const Scaler&) = default;
};

Scaler fitScaler(const Matrix& rows);
// Constant columns map to 0.
std::vector<double> applyScaler(const Scaler& s, const std::vector<double>& row);

// ---- mutual information

// Equal-frequency discretization into `bins` bins, then MI in bits. A value's
// bin is floor(rank * bins / n) with rank the number of strictly smaller
// values, so equal values always share a bin.
double mutualInformation(const std::vector<double>& column, const Labels& labels, std::size_t bins = 10);

// MI in bits of a joint probability table p[f][c].
double mutualInformationFromJoint(const Matrix& joint);

// Indices (0-based, ascending) of the k largest scores; ties prefer the lower
// index.
std::vector<std::size_t> selectTopK(const std::vector<double>& scores, std::size_t k);

// ---- PCA

struct PcaBasis {
  std::vector<double> mean;
  Matrix components;             // unit rows, by descending variance
  std::vector<double> variances; // eigenvalue of each kept component
  double totalVariance = 0;      // trace of the covariance

  std::size_t inputDims() const { return mean.size(); }
  std::size_t outputDims() const { return components.size(); }
  double explainedVarianceRatio(std::size_t i) const { return variances.at(i) / totalVariance; }

  friend bool operator==(const PcaBasis&, const PcaBasis&) = default;
};

// Eigenvectors of the sample covariance. Each component's largest-magnitude
// coordinate is made positive. Requires nComponents <= min(rows - 1, dims);
// throws DegenerateData when the covariance is zero.
PcaBasis pcaFit(const Matrix& rows, std::size_t nComponents);
std::vector<double> pcaTransform(const PcaBasis& basis, const std::vector<double>& row);

// ---- SVM

enum class KernelType { Linear, Rbf };

struct SvmModel {
  KernelType kernel = KernelType::Linear;
  double gamma = 0;
  double C = 1;
  Matrix supportVectors;
  std::vector<double> coefficients;  // alpha_i * y_i
  double bias = 0;
  std::size_t iterations = 0;

  friend bool operator==(const SvmModel&, const SvmModel&) = default;
};

struct SvmOptions {
  double tolerance = 1e-3;
  std::size_t maxIterations = 100000;
};

// Soft-margin C-SVM, dual solved by SMO with maximal-violating-pair
// selection. Throws SingleClass when only one label occurs.
SvmModel svmTrain(const Matrix& rows, const Labels& labels, KernelType kernel, double C, double gamma = 0,
                  const SvmOptions& options = {});
double svmDecision(const SvmModel& m, const std::vector<double>& row);
// 1 when the decision value is positive.
int svmPredict(const SvmModel& m, const std::vector<double>& row);

// ---- pipeline: select features by MI, standardize, PCA, SVM

struct PipelineParams {
  std::size_t k = 39;            // features kept by MI
  std::size_t nComponents = 0;   // 0 = all
  KernelType kernel = KernelType::Linear;
  double C = 1;
  double gamma = 0;              // RBF only; 0 = 1 / input dimension of the SVM

  friend bool operator==(const PipelineParams&, const PipelineParams&) = default;
};

struct Pipeline {
  PipelineParams params;
  std::vector<std::size_t> selected;
  Scaler scaler;
  PcaBasis pca;
  std::optional<SvmModel> svm;
  int constantLabel = 0;  // used when svm is empty

  int predict(const std::vector<double>& features) const;

  friend bool operator==(const Pipeline&, const Pipeline&) = default;
};

// Fits every stage on the given rows only. A single-class training set, or
// one whose selected features are all constant, yields a constant predictor
// for the majority label (ties go to Bad).
Pipeline fitPipeline(const Matrix& rows, const Labels& labels, const PipelineParams& params);

// Fraction of `validation` rows the pipeline fitted on `train` gets right.
double evaluateSplit(const Matrix& trainRows, const Labels& trainLabels, const Matrix& validationRows,
                     const Labels& validationLabels, const PipelineParams& params);

// Fold index per example. Each class is shuffled with the seed and dealt
// round-robin, positives first, so class proportions are kept per fold.
std::vector<std::size_t> stratifiedFolds(const Labels& labels, std::size_t folds, std::uint64_t seed);

// Mean validation accuracy over folds. Throws TooFewExamples when there are
// fewer examples than folds.
double crossValidate(const Matrix& rows, const Labels& labels, const PipelineParams& params, std::size_t folds,
                     std::uint64_t seed);

struct GridSpec {
  std::vector<std::size_t> k{5, 10, 20, 39};
  std::vector<std::size_t> nComponents{2, 5, 10, 0};
  std::vector<KernelType> kernels{KernelType::Linear, KernelType::Rbf};
  std::vector<double> C{0.1, 1, 10, 100};
  std::vector<double> gamma{0, 0.1, 1};  // 0 = 1 / dims
};

// Grid points in evaluation order. k and nComponents are clamped to what the
// data allows (nComponents <= min(rows - 1, k)); duplicate points after
// clamping are dropped.
std::vector<PipelineParams> expandGrid(const GridSpec& grid, std::size_t rows, std::size_t dims,
                                       std::size_t folds);

struct GridResult {
  PipelineParams params;
  double accuracy = 0;
};

// Best CV accuracy; ties go to the earlier grid point.
GridResult gridSearch(const Matrix& rows, const Labels& labels, const std::vector<PipelineParams>& grid,
                      std::size_t folds, std::uint64_t seed);

// ---- seeded shuffling

// Fisher-Yates with a 64-bit Mersenne Twister; identical on every platform.
void seededShuffle(std::vector<std::size_t>& items, std::uint64_t seed);

}  // namespace dlorder
