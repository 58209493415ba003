#include "dlorder/ml.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "dlorder/error.hpp"

namespace dlorder {

// ---- standardization

Scaler fitScaler(const Matrix& rows) {
  Scaler s;
  if (rows.empty()) return s;
  auto dims = rows.front().size();
  auto n = static_cast<double>(rows.size());
  s.mean.assign(dims, 0);
  s.std.assign(dims, 0);
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < dims; ++j) s.mean[j] += r[j];
  }
  for (auto& m : s.mean) m /= n;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < dims; ++j) s.std[j] += (r[j] - s.mean[j]) * (r[j] - s.mean[j]);
  }
  for (std::size_t j = 0; j < dims; ++j) {
    s.std[j] = std::sqrt(s.std[j] / n);
    // Treat round-off spread around a constant as constant.
    if (s.std[j] <= 1e-12 * std::max(1.0, std::abs(s.mean[j]))) s.std[j] = 0;
  }
  return s;
}

std::vector<double> applyScaler(const Scaler& s, const std::vector<double>& row) {
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = s.std[j] == 0 ? 0.0 : (row[j] - s.mean[j]) / s.std[j];
  return out;
}

// ---- mutual information

double mutualInformationFromJoint(const Matrix& joint) {
  std::vector<double> pf(joint.size(), 0);
  std::vector<double> pc;
  for (std::size_t f = 0; f < joint.size(); ++f) {
    if (pc.size() < joint[f].size()) pc.resize(joint[f].size(), 0);
    for (std::size_t c = 0; c < joint[f].size(); ++c) {
      pf[f] += joint[f][c];
      pc[c] += joint[f][c];
    }
  }
  double mi = 0;
  for (std::size_t f = 0; f < joint.size(); ++f) {
    for (std::size_t c = 0; c < joint[f].size(); ++c) {
      double p = joint[f][c];
      if (p > 0) mi += p * std::log2(p / (pf[f] * pc[c]));
    }
  }
  return mi;
}

double mutualInformation(const std::vector<double>& column, const Labels& labels, std::size_t bins) {
  auto n = column.size();
  if (n == 0) return 0;
  if (bins < 2) throw ConfigError("mutual information needs at least 2 bins");
  std::vector<double> sorted = column;
  std::sort(sorted.begin(), sorted.end());
  Matrix joint(bins, std::vector<double>(2, 0));
  for (std::size_t i = 0; i < n; ++i) {
    auto rank = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), column[i]) - sorted.begin());
    auto bin = rank * bins / n;
    joint[bin][labels[i] ? 1 : 0] += 1.0 / static_cast<double>(n);
  }
  return mutualInformationFromJoint(joint);
}

std::vector<std::size_t> selectTopK(const std::vector<double>& scores, std::size_t k) {
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return scores[a] > scores[b]; });
  idx.resize(std::min(k, idx.size()));
  std::sort(idx.begin(), idx.end());
  return idx;
}

// ---- PCA

PcaBasis pcaFit(const Matrix& rows, std::size_t nComponents) {
  if (rows.size() < 2) throw DegenerateData("PCA needs at least two rows");
  auto n = rows.size();
  auto dims = rows.front().size();
  if (nComponents == 0 || nComponents > dims || nComponents > n - 1) {
    throw ConfigError("PCA: " + std::to_string(nComponents) + " components requested from " + std::to_string(n) +
                      " rows of dimension " + std::to_string(dims));
  }
  Eigen::MatrixXd x(n, dims);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dims; ++j) x(i, j) = rows[i][j];
  }
  Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;
  Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(n - 1);
  if (cov.cwiseAbs().maxCoeff() == 0) throw DegenerateData("PCA: covariance is zero");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw DegenerateData("PCA: eigendecomposition failed");

  PcaBasis b;
  b.mean.assign(mean.data(), mean.data() + dims);
  b.totalVariance = cov.trace();
  // Eigenvalues come ascending.
  for (std::size_t c = 0; c < nComponents; ++c) {
    auto col = static_cast<Eigen::Index>(dims - 1 - c);
    Eigen::VectorXd v = solver.eigenvectors().col(col);
    Eigen::Index big = 0;
    v.cwiseAbs().maxCoeff(&big);
    if (v(big) < 0) v = -v;
    b.components.emplace_back(v.data(), v.data() + dims);
    b.variances.push_back(std::max(0.0, solver.eigenvalues()(col)));
  }
  return b;
}

std::vector<double> pcaTransform(const PcaBasis& basis, const std::vector<double>& row) {
  std::vector<double> out(basis.components.size(), 0);
  for (std::size_t c = 0; c < basis.components.size(); ++c) {
    double s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += basis.components[c][j] * (row[j] - basis.mean[j]);
    out[c] = s;
  }
  return out;
}

// ---- SVM

namespace {

double kernelValue(KernelType k, double gamma, const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  if (k == KernelType::Linear) {
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::exp(-gamma * s);
}

}  // namespace

SvmModel svmTrain(const Matrix& rows, const Labels& labels, KernelType kernel, double C, double gamma,
                  const SvmOptions& options) {
  auto n = rows.size();
  bool pos = false, neg = false;
  for (auto l : labels) (l ? pos : neg) = true;
  if (!pos || !neg) throw SingleClass("SVM training data contains a single class");
  if (!(C > 0)) throw ConfigError("SVM: C must be positive");
  if (kernel == KernelType::Rbf && gamma <= 0) gamma = 1.0 / static_cast<double>(std::max<std::size_t>(1, rows.front().size()));

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = labels[i] ? 1.0 : -1.0;
  // Q_ij = y_i y_j K_ij
  std::vector<double> Q(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double q = y[i] * y[j] * kernelValue(kernel, gamma, rows[i], rows[j]);
      Q[i * n + j] = q;
      Q[j * n + i] = q;
    }
  }
  std::vector<double> alpha(n, 0), G(n, -1.0);
  auto up = [&](std::size_t t) { return (y[t] > 0 && alpha[t] < C) || (y[t] < 0 && alpha[t] > 0); };
  auto low = [&](std::size_t t) { return (y[t] > 0 && alpha[t] > 0) || (y[t] < 0 && alpha[t] < C); };

  std::size_t iter = 0;
  for (; iter < options.maxIterations; ++iter) {
    // Maximal violating pair.
    double gmax = -INFINITY, gmin = INFINITY;
    std::size_t i = n, j = n;
    for (std::size_t t = 0; t < n; ++t) {
      double v = -y[t] * G[t];
      if (up(t) && v > gmax) {
        gmax = v;
        i = t;
      }
      if (low(t) && v < gmin) {
        gmin = v;
        j = t;
      }
    }
    if (i == n || j == n || gmax - gmin < options.tolerance) break;

    double oldI = alpha[i], oldJ = alpha[j];
    const double* Qi = &Q[i * n];
    const double* Qj = &Q[j * n];
    if (y[i] != y[j]) {
      double quad = Qi[i] + Qj[j] + 2 * Qi[j];
      if (quad <= 0) quad = 1e-12;
      double delta = (-G[i] - G[j]) / quad;
      double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0) {
        if (alpha[j] < 0) {
          alpha[j] = 0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = -diff;
      }
      if (diff > 0) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = C - diff;
        }
      } else if (alpha[j] > C) {
        alpha[j] = C;
        alpha[i] = C + diff;
      }
    } else {
      double quad = Qi[i] + Qj[j] - 2 * Qi[j];
      if (quad <= 0) quad = 1e-12;
      double delta = (G[i] - G[j]) / quad;
      double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > C) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = sum - C;
        }
      } else if (alpha[j] < 0) {
        alpha[j] = 0;
        alpha[i] = sum;
      }
      if (sum > C) {
        if (alpha[j] > C) {
          alpha[j] = C;
          alpha[i] = sum - C;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = sum;
      }
    }
    double dI = alpha[i] - oldI, dJ = alpha[j] - oldJ;
    for (std::size_t t = 0; t < n; ++t) G[t] += Qi[t] * dI + Qj[t] * dJ;
  }

  // rho from free vectors, else the midpoint of the feasible interval.
  double ub = INFINITY, lb = -INFINITY, freeSum = 0;
  std::size_t freeCount = 0;
  for (std::size_t t = 0; t < n; ++t) {
    double yg = y[t] * G[t];
    if (alpha[t] > 0 && alpha[t] < C) {
      freeSum += yg;
      ++freeCount;
    } else if ((alpha[t] >= C && y[t] < 0) || (alpha[t] <= 0 && y[t] > 0)) {
      ub = std::min(ub, yg);
    } else {
      lb = std::max(lb, yg);
    }
  }
  double rho = freeCount > 0 ? freeSum / static_cast<double>(freeCount) : (ub + lb) / 2;

  SvmModel m;
  m.kernel = kernel;
  m.gamma = kernel == KernelType::Rbf ? gamma : 0;
  m.C = C;
  m.bias = -rho;
  m.iterations = iter;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0) {
      m.supportVectors.push_back(rows[t]);
      m.coefficients.push_back(alpha[t] * y[t]);
    }
  }
  return m;
}

double svmDecision(const SvmModel& m, const std::vector<double>& row) {
  double s = m.bias;
  for (std::size_t i = 0; i < m.supportVectors.size(); ++i) {
    s += m.coefficients[i] * kernelValue(m.kernel, m.gamma, m.supportVectors[i], row);
  }
  return s;
}

int svmPredict(const SvmModel& m, const std::vector<double>& row) { return svmDecision(m, row) > 0 ? 1 : 0; }

// ---- pipeline

namespace {

std::vector<double> pick(const std::vector<double>& row, const std::vector<std::size_t>& idx) {
  std::vector<double> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(row[i]);
  return out;
}

Pipeline constantPipeline(const PipelineParams& params, const Labels& labels) {
  Pipeline p;
  p.params = params;
  std::size_t good = 0;
  for (auto l : labels) good += l ? 1 : 0;
  p.constantLabel = 2 * good > labels.size() ? 1 : 0;
  return p;
}

}  // namespace

int Pipeline::predict(const std::vector<double>& features) const {
  if (!svm) return constantLabel;
  auto x = applyScaler(scaler, pick(features, selected));
  return svmPredict(*svm, pcaTransform(pca, x));
}

Pipeline fitPipeline(const Matrix& rows, const Labels& labels, const PipelineParams& params) {
  if (rows.empty()) throw TooFewExamples("no training rows");
  bool pos = std::find(labels.begin(), labels.end(), 1) != labels.end();
  bool neg = std::find(labels.begin(), labels.end(), 0) != labels.end();
  if (!pos || !neg) return constantPipeline(params, labels);

  auto dims = rows.front().size();
  Pipeline p;
  p.params = params;
  std::vector<double> scores(dims);
  std::vector<double> column(rows.size());
  for (std::size_t j = 0; j < dims; ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i][j];
    scores[j] = mutualInformation(column, labels);
  }
  p.selected = selectTopK(scores, std::clamp<std::size_t>(params.k, 1, dims));

  Matrix reduced;
  reduced.reserve(rows.size());
  for (const auto& r : rows) reduced.push_back(pick(r, p.selected));
  p.scaler = fitScaler(reduced);
  for (auto& r : reduced) r = applyScaler(p.scaler, r);

  auto maxComponents = std::min(rows.size() - 1, p.selected.size());
  auto nc = params.nComponents == 0 ? maxComponents : std::min(params.nComponents, maxComponents);
  if (nc == 0) return constantPipeline(params, labels);
  try {
    p.pca = pcaFit(reduced, nc);
  } catch (const DegenerateData&) {
    return constantPipeline(params, labels);
  }
  for (auto& r : reduced) r = pcaTransform(p.pca, r);
  p.svm = svmTrain(reduced, labels, params.kernel, params.C, params.gamma);
  return p;
}

double evaluateSplit(const Matrix& trainRows, const Labels& trainLabels, const Matrix& validationRows,
                     const Labels& validationLabels, const PipelineParams& params) {
  if (validationRows.empty()) throw TooFewExamples("empty validation set");
  auto p = fitPipeline(trainRows, trainLabels, params);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < validationRows.size(); ++i) {
    correct += p.predict(validationRows[i]) == validationLabels[i] ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(validationRows.size());
}

void seededShuffle(std::vector<std::size_t>& items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

std::vector<std::size_t> stratifiedFolds(const Labels& labels, std::size_t folds, std::uint64_t seed) {
  if (folds == 0) throw ConfigError("fold count must be positive");
  std::vector<std::size_t> positives, negatives;
  for (std::size_t i = 0; i < labels.size(); ++i) (labels[i] ? positives : negatives).push_back(i);
  seededShuffle(positives, seed);
  seededShuffle(negatives, seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> fold(labels.size());
  std::size_t next = 0;
  for (auto i : positives) fold[i] = next++ % folds;
  for (auto i : negatives) fold[i] = next++ % folds;
  return fold;
}

double crossValidate(const Matrix& rows, const Labels& labels, const PipelineParams& params, std::size_t folds,
                     std::uint64_t seed) {
  if (rows.size() < folds || folds < 2) {
    throw TooFewExamples(std::to_string(rows.size()) + " examples cannot be split into " + std::to_string(folds) +
                         " folds");
  }
  auto fold = stratifiedFolds(labels, folds, seed);
  double sum = 0;
  for (std::size_t f = 0; f < folds; ++f) {
    Matrix tr, va;
    Labels trl, val;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (fold[i] == f) {
        va.push_back(rows[i]);
        val.push_back(labels[i]);
      } else {
        tr.push_back(rows[i]);
        trl.push_back(labels[i]);
      }
    }
    sum += evaluateSplit(tr, trl, va, val, params);
  }
  return sum / static_cast<double>(folds);
}

std::vector<PipelineParams> expandGrid(const GridSpec& grid, std::size_t rows, std::size_t dims, std::size_t folds) {
  // Smallest training fold.
  auto trainRows = folds > 1 ? rows - (rows + folds - 1) / folds : rows;
  std::vector<PipelineParams> out;
  for (auto k0 : grid.k) {
    auto k = std::clamp<std::size_t>(k0, 1, dims);
    for (auto nc0 : grid.nComponents) {
      auto cap = std::min(k, trainRows > 0 ? trainRows - 1 : 0);
      auto nc = nc0 == 0 || nc0 >= cap ? 0 : nc0;
      for (auto kernel : grid.kernels) {
        for (auto c : grid.C) {
          auto gammas = kernel == KernelType::Rbf ? grid.gamma : std::vector<double>{0};
          for (auto g : gammas) {
            PipelineParams p{k, nc, kernel, c, g};
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
          }
        }
      }
    }
  }
  return out;
}

GridResult gridSearch(const Matrix& rows, const Labels& labels, const std::vector<PipelineParams>& grid,
                      std::size_t folds, std::uint64_t seed) {
  if (grid.empty()) throw ConfigError("empty parameter grid");
  GridResult best{grid.front(), -1};
  for (const auto& p : grid) {
    auto acc = crossValidate(rows, labels, p, folds, seed);
    if (acc > best.accuracy) best = {p, acc};
  }
  return best;
}

}  // namespace dlorder
