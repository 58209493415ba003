#include "dlorder/selection.hpp"

#include <algorithm>
#include <numeric>

#include "dlorder/error.hpp"

namespace dlorder {

PriorityTable assignPriorities(const std::array<double, HeuristicConfig::kCount>& accuracies) {
  std::array<int, HeuristicConfig::kCount> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return accuracies[a] > accuracies[b]; });
  PriorityTable priority{};
  for (int rank = 0; rank < HeuristicConfig::kCount; ++rank) priority[order[rank]] = rank + 1;
  return priority;
}

int selectHeuristic(const std::array<bool, HeuristicConfig::kCount>& good, const PriorityTable& priority) {
  int best = -1;
  for (int c = 0; c < HeuristicConfig::kCount; ++c) {
    if (good[c] && (best < 0 || priority[c] < priority[best])) best = c;
  }
  if (best >= 0) return best + 1;
  int worst = 0;
  for (int c = 1; c < HeuristicConfig::kCount; ++c) {
    if (priority[c] > priority[worst]) worst = c;
  }
  return worst + 1;
}

double fScore(const std::vector<bool>& predicted, const std::vector<bool>& actual) {
  if (predicted.size() != actual.size()) throw MismatchedIds("prediction and label counts differ");
  double tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] && actual[i]) ++tp;
    if (predicted[i] && !actual[i]) ++fp;
    if (!predicted[i] && actual[i]) ++fn;
  }
  double precision = tp + fp > 0 ? tp / (tp + fp) : 0;
  double recall = tp + fn > 0 ? tp / (tp + fn) : 0;
  return precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0;
}

}  // namespace dlorder
