#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "los/instance.hpp"
#include "los/narrow_array.hpp"
#include "los/options.hpp"
#include "los/windows.hpp"

namespace los {

/// MIS[j, W] and pred[j, W] over the windows valid at each column.
///
/// Column 0 holds only the zero window with value 0. Predecessors are kept
/// for every column; values only when the table was created with history.
class DpTable {
 public:
  struct Column {
    std::vector<std::uint32_t> windows;  // ascending
    std::vector<std::uint32_t> preds;    // parallel to windows
    std::vector<Rational> values;        // parallel to windows, history only
    std::uint32_t best = 0;              // argmax, smallest index on ties
    Rational best_value;
  };

  int columns() const { return static_cast<int>(cols_.size()); }
  bool has_values() const { return keep_values_; }

  /// MIS[j, w] if w is valid at column j (requires history for j >= 1).
  std::optional<Rational> mis(int j, std::size_t w) const;
  std::optional<std::size_t> pred(int j, std::size_t w) const;
  const Column& column(int j) const { return cols_.at(j - 1); }
  std::span<const std::uint32_t> valid_windows(int j) const;

 private:
  friend class NarrowDp;
  std::vector<Column> cols_;
  bool keep_values_ = false;
};

/// Column-at-a-time form of the feasible-window DP. Columns before the first
/// pushed one behave as the zero padding of array(G).
class NarrowDp {
 public:
  explicit NarrowDp(std::shared_ptr<const WindowSet> windows,
                    TransitionStrategy strategy = TransitionStrategy::kHeadIndex, bool keep_history = false);

  /// Appends column j = columns()+1; `weights` has one entry per row (0 = empty).
  void push_column(std::span<const Rational> weights);

  int columns() const { return table_.columns(); }
  /// Largest array sum over the first c pushed columns (c = 0 gives 0).
  Rational best_weight(int c) const;
  Rational best_weight() const { return best_weight(columns()); }
  /// Placements (row, column) of the optimal independent array over the
  /// first c columns, recovered through pred.
  std::vector<std::pair<std::size_t, int>> extract(int c) const;
  /// W_1..W_c visited while unwinding pred from the argmax at column c.
  std::vector<std::size_t> window_chain(int c) const;

  const DpTable& table() const { return table_; }
  const WindowSet& windows() const { return *windows_; }

 private:
  bool supported(std::size_t w) const;
  bool occupied(std::size_t row, int pos) const;

  std::shared_ptr<const WindowSet> windows_;
  TransitionStrategy strategy_;
  DpTable table_;
  std::vector<Rational> ring_;  // last omega columns, slot = column mod omega
  std::vector<Rational> prev_val_, cur_val_;
  std::vector<std::uint8_t> cur_ok_;
  std::vector<std::uint32_t> prev_valid_;
  std::vector<std::uint32_t> best_by_head_;
};

/// Exact maximum-weight independent set of a narrow array. The returned
/// solution lists instance coordinates and records `windows` and
/// `long_axis` in meta.
Solution solve_mis_narrow(const NarrowArray& array, const SolverOptions& options = {},
                          WindowCache* cache = nullptr);

/// build_array + solve_mis_narrow along options.long_axis (or the default).
Solution solve_exact_narrow(const LosInstance& inst, const SolverOptions& options = {},
                            WindowCache* cache = nullptr);

}  // namespace los
