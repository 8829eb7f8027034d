#include "los/windows.hpp"

#include <unordered_map>

#include "los/errors.hpp"

namespace los {

WindowRules WindowRules::line_of_sight(const RowSpace& rows, int omega) {
  WindowRules rules;
  rules.rows = rows.size();
  rules.omega = omega;
  rules.conflict = rows.conflicts(omega);
  bool any = false;
  for (auto c : rules.conflict) any = any || c;
  if (!any) rules.conflict.clear();
  return rules;
}

WindowRules WindowRules::capacity(std::size_t rows, int omega, int cap) {
  WindowRules rules;
  rules.rows = rows;
  rules.omega = omega;
  rules.column_cap = cap;
  return rules;
}

std::string FeasibleWindow::key() const {
  std::string k;
  k.reserve(positions.size() * 2);
  for (std::uint16_t p : positions) {
    k.push_back(static_cast<char>(p >> 8));
    k.push_back(static_cast<char>(p & 0xff));
  }
  return k;
}

bool FeasibleWindow::is_zero() const {
  for (auto p : positions) {
    if (p != 0) return false;
  }
  return true;
}

std::vector<std::uint8_t> FeasibleWindow::to_array(int omega) const {
  std::vector<std::uint8_t> a(positions.size() * static_cast<std::size_t>(omega), 0);
  for (std::size_t r = 0; r < positions.size(); ++r) {
    if (positions[r] != 0) a[r * omega + positions[r] - 1] = 1;
  }
  return a;
}

namespace {

struct Enumerator {
  const WindowRules& rules;
  std::size_t budget;
  std::vector<std::uint16_t> cur;
  std::vector<std::vector<std::uint32_t>> by_column;  // rows placed in each column
  std::vector<std::uint16_t>& out;
  std::size_t count = 0;

  bool can_place(std::size_t row, int col) const {
    const auto& placed = by_column[col];
    if (rules.column_cap > 0 && static_cast<int>(placed.size()) >= rules.column_cap) return false;
    for (auto other : placed) {
      if (rules.rows_conflict(row, other)) return false;
    }
    return true;
  }

  void run(std::size_t row) {
    if (row == rules.rows) {
      if (++count > budget) {
        throw CapacityError("feasible window count exceeds the window budget of " + std::to_string(budget) +
                            " (rows=" + std::to_string(rules.rows) + ", omega=" + std::to_string(rules.omega) +
                            ")");
      }
      out.insert(out.end(), cur.begin(), cur.end());
      return;
    }
    cur[row] = 0;
    run(row + 1);
    for (int col = 1; col <= rules.omega; ++col) {
      if (!can_place(row, col)) continue;
      cur[row] = static_cast<std::uint16_t>(col);
      by_column[col].push_back(static_cast<std::uint32_t>(row));
      run(row + 1);
      by_column[col].pop_back();
    }
    cur[row] = 0;
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

WindowSet WindowSet::enumerate(const WindowRules& rules, std::size_t budget) {
  if (rules.rows == 0) throw ContractViolation("window rules need at least one row");
  if (rules.omega < 2 || rules.omega > 0xffff) {
    throw CapacityError("omega " + std::to_string(rules.omega) + " outside the supported window range 2..65535");
  }
  WindowSet set;
  set.rules_ = rules;
  Enumerator e{rules, budget, std::vector<std::uint16_t>(rules.rows, 0),
               std::vector<std::vector<std::uint32_t>>(rules.omega + 1), set.positions_};
  e.run(0);
  set.count_ = e.count;

  const std::size_t rows = rules.rows;
  const auto omega = static_cast<std::uint16_t>(rules.omega);
  std::unordered_map<std::vector<std::uint16_t>, std::uint32_t, VecHash> head_ids;
  set.head_id_.resize(set.count_);
  set.tail_id_.resize(set.count_);
  set.last_begin_.reserve(set.count_ + 1);
  set.place_begin_.reserve(set.count_ + 1);
  std::vector<std::uint16_t> head(rows), tail(rows);
  for (std::size_t i = 0; i < set.count_; ++i) {
    auto pos = set.positions(i);
    set.last_begin_.push_back(set.last_rows_.size());
    set.place_begin_.push_back(set.placements_.size());
    for (std::size_t r = 0; r < rows; ++r) {
      const std::uint16_t p = pos[r];
      if (p == omega) set.last_rows_.push_back(static_cast<std::uint32_t>(r));
      if (p != 0) set.placements_.emplace_back(static_cast<std::uint32_t>(r), p);
      head[r] = (p >= 1 && p < omega) ? p : 0;
      tail[r] = p >= 2 ? static_cast<std::uint16_t>(p - 1) : 0;
    }
    auto [it, inserted] = head_ids.try_emplace(head, static_cast<std::uint32_t>(head_ids.size()));
    set.head_id_[i] = it->second;
    set.index_.emplace(std::vector<std::uint16_t>(pos.begin(), pos.end()), i);
  }
  set.last_begin_.push_back(set.last_rows_.size());
  set.place_begin_.push_back(set.placements_.size());
  // every tail is itself a feasible window with an empty last column, so its
  // array appears among the heads
  for (std::size_t i = 0; i < set.count_; ++i) {
    auto pos = set.positions(i);
    for (std::size_t r = 0; r < rows; ++r) tail[r] = pos[r] >= 2 ? static_cast<std::uint16_t>(pos[r] - 1) : 0;
    auto it = head_ids.find(tail);
    if (it == head_ids.end()) throw std::logic_error("window tail missing from head index");
    set.tail_id_[i] = it->second;
  }
  set.num_heads_ = head_ids.size();
  return set;
}

FeasibleWindow WindowSet::window(std::size_t i) const {
  auto p = positions(i);
  return FeasibleWindow{{p.begin(), p.end()}};
}

std::optional<std::size_t> WindowSet::find(std::span<const std::uint16_t> positions) const {
  auto it = index_.find(std::vector<std::uint16_t>(positions.begin(), positions.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::uint32_t> WindowSet::last_column_rows(std::size_t i) const {
  return {last_rows_.data() + last_begin_[i], last_begin_[i + 1] - last_begin_[i]};
}

std::span<const std::pair<std::uint32_t, std::uint16_t>> WindowSet::placements(std::size_t i) const {
  return {placements_.data() + place_begin_[i], place_begin_[i + 1] - place_begin_[i]};
}

std::vector<FeasibleWindow> enumerate_windows(const RowSpace& rows, int omega, std::size_t budget) {
  WindowSet set = WindowSet::enumerate(WindowRules::line_of_sight(rows, omega), budget);
  std::vector<FeasibleWindow> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) out.push_back(set.window(i));
  return out;
}

bool consistent(const FeasibleWindow& w1, const FeasibleWindow& w2, int omega) {
  if (w1.positions.size() != w2.positions.size()) {
    throw ContractViolation("consistency check between windows of different shapes");
  }
  const auto a1 = w1.to_array(omega);
  const auto a2 = w2.to_array(omega);
  for (std::size_t r = 0; r < w1.positions.size(); ++r) {
    for (int c = 1; c < omega; ++c) {
      // t(w1) column c is w1 column c+1; h(w2) column c is w2 column c
      if (a1[r * omega + c] != a2[r * omega + c - 1]) return false;
    }
  }
  return true;
}

std::vector<FeasibleWindow> successors(const FeasibleWindow& w, const NarrowArray& array, int j,
                                       std::size_t budget) {
  if (j < 1 || j > array.n()) throw ContractViolation("successors needs 1 <= j <= n");
  if (w.positions.size() != array.num_rows()) throw ContractViolation("window shape does not match the array");
  const WindowSet set =
      WindowSet::enumerate(WindowRules::line_of_sight(array.row_space(), array.omega()), budget);
  const int omega = array.omega();
  auto occupied = [&](std::size_t row, int pos) { return array.occupied(row, j - omega + pos); };
  std::vector<FeasibleWindow> out;
  for (std::size_t idx : successor_indices(set, w.positions, occupied)) out.push_back(set.window(idx));
  return out;
}

std::shared_ptr<const WindowSet> WindowCache::line_of_sight(const RowSpace& rows, int omega) {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(rows.rows(), omega);
  if (auto it = sets_.find(key); it != sets_.end()) return it->second;
  auto set = std::make_shared<const WindowSet>(WindowSet::enumerate(WindowRules::line_of_sight(rows, omega), budget_));
  sets_.emplace(std::move(key), set);
  return set;
}

int effective_omega(int omega, int n, int max_row_extent) {
  const int span = std::max({n, max_row_extent, 2});
  return std::min(omega, span);
}

}  // namespace los
