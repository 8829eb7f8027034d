#pragma once

#include <cstddef>
#include <optional>

#include "los/windows.hpp"

namespace los {

/// How the DP finds, for each window W at column j, the best consistent
/// predecessor at column j-1.
enum class TransitionStrategy {
  /// Group column j-1 by t(W*) once, then look up h(W). O(|F|) per column.
  kHeadIndex,
  /// Push each W* to its explicit successor list. Reference path.
  kSuccessorScan,
};

struct SolverOptions {
  std::size_t window_budget = kDefaultWindowBudget;
  /// Worker threads for independent strip/block subproblems. Output does
  /// not depend on this value.
  unsigned threads = 1;
  /// Column axis of the DP; defaults to the axis of largest extent.
  std::optional<int> long_axis;
  TransitionStrategy transition = TransitionStrategy::kHeadIndex;
};

}  // namespace los
