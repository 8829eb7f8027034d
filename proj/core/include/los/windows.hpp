#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "los/narrow_array.hpp"

namespace los {

inline constexpr std::size_t kDefaultWindowBudget = 10'000'000;

/// Constraints a width-omega 0/1 window must satisfy to be feasible.
///
/// Every rule set allows at most one placement per row (two entries in one
/// row of a width-omega window are always < omega apart). On top of that,
/// two rows flagged in `conflict` may not both be placed in the same column,
/// and `column_cap` (> 0) bounds the placements per column.
struct WindowRules {
  std::size_t rows = 0;
  int omega = 2;
  std::vector<std::uint8_t> conflict;  // rows*rows, empty means no row conflicts
  int column_cap = 0;                  // 0 = unlimited

  /// Independent-array rules of a LoS row space.
  static WindowRules line_of_sight(const RowSpace& rows, int omega);
  /// AdsSched rules: rows never conflict, at most `cap` per column.
  static WindowRules capacity(std::size_t rows, int omega, int cap);

  bool rows_conflict(std::size_t a, std::size_t b) const {
    return !conflict.empty() && conflict[a * rows + b] != 0;
  }
};

/// A feasible window: per row, the column (1..omega) of its single 1-entry,
/// or 0 for an empty row.
struct FeasibleWindow {
  std::vector<std::uint16_t> positions;

  /// Canonical key: two big-endian bytes per row, rows in order. Byte order
  /// equals lexicographic order of `positions`.
  std::string key() const;
  bool is_zero() const;
  /// Literal 0/1 array, rows x omega, row-major.
  std::vector<std::uint8_t> to_array(int omega) const;

  friend bool operator==(const FeasibleWindow&, const FeasibleWindow&) = default;
  friend auto operator<=>(const FeasibleWindow&, const FeasibleWindow&) = default;
};

/// The set F of all feasible windows for a rule set, in ascending key order,
/// with the index structures the DP needs.
class WindowSet {
 public:
  /// Throws CapacityError once more than `budget` windows exist.
  static WindowSet enumerate(const WindowRules& rules, std::size_t budget = kDefaultWindowBudget);

  const WindowRules& rules() const { return rules_; }
  std::size_t rows() const { return rules_.rows; }
  int omega() const { return rules_.omega; }
  std::size_t size() const { return count_; }

  std::span<const std::uint16_t> positions(std::size_t i) const {
    return {positions_.data() + i * rules_.rows, rules_.rows};
  }
  FeasibleWindow window(std::size_t i) const;
  std::optional<std::size_t> find(std::span<const std::uint16_t> positions) const;
  std::size_t zero_index() const { return 0; }

  /// Rows whose entry sits in the last column (position omega).
  std::span<const std::uint32_t> last_column_rows(std::size_t i) const;
  /// (row, position) pairs of all entries.
  std::span<const std::pair<std::uint32_t, std::uint16_t>> placements(std::size_t i) const;

  /// Ids of h(W) and t(W) in a shared id space over (omega-1)-column arrays:
  /// W1 |= W2 iff tail_id(W1) == head_id(W2).
  std::uint32_t head_id(std::size_t i) const { return head_id_[i]; }
  std::uint32_t tail_id(std::size_t i) const { return tail_id_[i]; }
  std::size_t num_heads() const { return num_heads_; }

 private:
  WindowRules rules_;
  std::size_t count_ = 0;
  std::vector<std::uint16_t> positions_;
  std::vector<std::uint32_t> last_rows_;
  std::vector<std::size_t> last_begin_;
  std::vector<std::pair<std::uint32_t, std::uint16_t>> placements_;
  std::vector<std::size_t> place_begin_;
  std::vector<std::uint32_t> head_id_;
  std::vector<std::uint32_t> tail_id_;
  std::size_t num_heads_ = 0;
  std::map<std::vector<std::uint16_t>, std::size_t> index_;
};

/// F for a LoS row space, ascending key order.
std::vector<FeasibleWindow> enumerate_windows(const RowSpace& rows, int omega,
                                              std::size_t budget = kDefaultWindowBudget);

/// w1 |= w2: dropping the first column of w1 and the last column of w2
/// leaves identical 0/1 arrays. Compared literally on the arrays.
bool consistent(const FeasibleWindow& w1, const FeasibleWindow& w2, int omega);

/// Windows W' in `set` with w |= W' whose entries all sit on occupied cells.
/// `occupied(row, pos)` reports whether the cell under window position pos
/// (1..omega) is occupied.
template <typename Occupied>
std::vector<std::size_t> successor_indices(const WindowSet& set, std::span<const std::uint16_t> w,
                                           Occupied&& occupied);

/// All W' in F with w |= W' and W' supported by array[j-omega+1 : j].
std::vector<FeasibleWindow> successors(const FeasibleWindow& w, const NarrowArray& array, int j,
                                       std::size_t budget = kDefaultWindowBudget);

/// Thread-safe memo of WindowSets keyed by rule shape.
class WindowCache {
 public:
  explicit WindowCache(std::size_t budget = kDefaultWindowBudget) : budget_(budget) {}
  std::shared_ptr<const WindowSet> line_of_sight(const RowSpace& rows, int omega);
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
  std::mutex mu_;
  std::map<std::pair<std::vector<Coords>, int>, std::shared_ptr<const WindowSet>> sets_;
};

/// Smallest omega' <= omega that induces the same adjacency on a narrow
/// array with n columns and the given largest row extent.
int effective_omega(int omega, int n, int max_row_extent);

// ---------------------------------------------------------------------------

template <typename Occupied>
std::vector<std::size_t> successor_indices(const WindowSet& set, std::span<const std::uint16_t> w,
                                           Occupied&& occupied) {
  const std::size_t rows = set.rows();
  const int omega = set.omega();
  std::vector<std::uint16_t> base(rows, 0);
  std::vector<std::uint32_t> free_rows;
  for (std::size_t r = 0; r < rows; ++r) {
    if (w[r] >= 2) {
      base[r] = static_cast<std::uint16_t>(w[r] - 1);
      if (!occupied(r, base[r])) return {};
    } else if (occupied(r, omega)) {
      free_rows.push_back(static_cast<std::uint32_t>(r));
    }
  }
  std::vector<std::size_t> out;
  const std::size_t subsets = std::size_t{1} << free_rows.size();
  std::vector<std::uint16_t> cand(rows);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    cand = base;
    for (std::size_t b = 0; b < free_rows.size(); ++b) {
      if (mask & (std::size_t{1} << b)) cand[free_rows[b]] = static_cast<std::uint16_t>(omega);
    }
    if (auto idx = set.find(cand)) out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace los
