#pragma once

#include <array>
#include <vector>

#include "dlorder/heuristics.hpp"

namespace dlorder {

// priority[config-1] = rank, 1 = most trusted.
using PriorityTable = std::array<int, HeuristicConfig::kCount>;

// Rank 1 goes to the highest accuracy; equal accuracies rank by config number.
PriorityTable assignPriorities(const std::array<double, HeuristicConfig::kCount>& accuracies);

// The Good config with the best rank; when every prediction is Bad, the config
// with the worst rank.
int selectHeuristic(const std::array<bool, HeuristicConfig::kCount>& good, const PriorityTable& priority);

// F1 with Good (true) as the positive class; 0 when precision + recall is 0.
double fScore(const std::vector<bool>& predicted, const std::vector<bool>& actual);

}  // namespace dlorder
