#include "los/narrow_dp.hpp"

#include <algorithm>
#include <limits>

#include "los/errors.hpp"

namespace los {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::span<const std::uint32_t> DpTable::valid_windows(int j) const {
  static const std::uint32_t zero = 0;
  if (j == 0) return {&zero, 1};
  return cols_.at(j - 1).windows;
}

std::optional<Rational> DpTable::mis(int j, std::size_t w) const {
  if (j == 0) return w == 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
  if (!keep_values_) throw ContractViolation("DP values were not kept; enable history");
  const Column& col = cols_.at(j - 1);
  auto it = std::lower_bound(col.windows.begin(), col.windows.end(), w);
  if (it == col.windows.end() || *it != w) return std::nullopt;
  return col.values[it - col.windows.begin()];
}

std::optional<std::size_t> DpTable::pred(int j, std::size_t w) const {
  if (j < 1) return std::nullopt;
  const Column& col = cols_.at(j - 1);
  auto it = std::lower_bound(col.windows.begin(), col.windows.end(), w);
  if (it == col.windows.end() || *it != w) return std::nullopt;
  return col.preds[it - col.windows.begin()];
}

NarrowDp::NarrowDp(std::shared_ptr<const WindowSet> windows, TransitionStrategy strategy, bool keep_history)
    : windows_(std::move(windows)), strategy_(strategy) {
  table_.keep_values_ = keep_history;
  const std::size_t f = windows_->size();
  ring_.assign(windows_->rows() * static_cast<std::size_t>(windows_->omega()), Rational(0));
  prev_val_.assign(f, Rational(0));
  cur_val_.assign(f, Rational(0));
  cur_ok_.assign(f, 0);
  prev_valid_ = {static_cast<std::uint32_t>(windows_->zero_index())};
  best_by_head_.assign(windows_->num_heads(), kNone);
}

bool NarrowDp::occupied(std::size_t row, int pos) const {
  const int omega = windows_->omega();
  const int col = columns() - omega + pos;
  if (col < 1) return false;
  return !ring_[static_cast<std::size_t>(col % omega) * windows_->rows() + row].is_zero();
}

bool NarrowDp::supported(std::size_t w) const {
  for (const auto& [row, pos] : windows_->placements(w)) {
    if (!occupied(row, pos)) return false;
  }
  return true;
}

void NarrowDp::push_column(std::span<const Rational> weights) {
  const WindowSet& set = *windows_;
  if (weights.size() != set.rows()) throw ContractViolation("column has the wrong number of rows");
  const int j = columns() + 1;
  const int omega = set.omega();
  std::copy(weights.begin(), weights.end(), ring_.begin() + static_cast<std::ptrdiff_t>((j % omega) * set.rows()));
  table_.cols_.emplace_back();
  DpTable::Column& col = table_.cols_.back();

  auto contribution = [&](std::size_t w) {
    Rational sum;
    for (auto row : set.last_column_rows(w)) sum += weights[row];
    return sum;
  };

  if (strategy_ == TransitionStrategy::kHeadIndex) {
    for (auto i : prev_valid_) {
      auto& slot = best_by_head_[set.tail_id(i)];
      if (slot == kNone || prev_val_[i] > prev_val_[slot]) slot = i;
    }
    for (std::size_t w = 0; w < set.size(); ++w) {
      if (!supported(w)) continue;
      const std::uint32_t p = best_by_head_[set.head_id(w)];
      if (p == kNone) continue;
      col.windows.push_back(static_cast<std::uint32_t>(w));
      col.preds.push_back(p);
      cur_val_[w] = contribution(w) + prev_val_[p];
    }
    for (auto i : prev_valid_) best_by_head_[set.tail_id(i)] = kNone;
  } else {
    std::vector<std::uint32_t> pred_slot(set.size(), kNone);
    auto occ = [this](std::size_t row, int pos) { return occupied(row, pos); };
    for (auto i : prev_valid_) {
      for (std::size_t w : successor_indices(set, set.positions(i), occ)) {
        Rational cand = contribution(w) + prev_val_[i];
        if (!cur_ok_[w] || cand > cur_val_[w]) {
          cur_ok_[w] = 1;
          cur_val_[w] = cand;
          pred_slot[w] = i;
        }
      }
    }
    for (std::size_t w = 0; w < set.size(); ++w) {
      if (!cur_ok_[w]) continue;
      cur_ok_[w] = 0;
      col.windows.push_back(static_cast<std::uint32_t>(w));
      col.preds.push_back(pred_slot[w]);
    }
  }

  col.best = col.windows.front();
  col.best_value = cur_val_[col.best];
  for (auto w : col.windows) {
    if (cur_val_[w] > col.best_value) {
      col.best = w;
      col.best_value = cur_val_[w];
    }
  }
  if (table_.keep_values_) {
    col.values.reserve(col.windows.size());
    for (auto w : col.windows) col.values.push_back(cur_val_[w]);
  }
  std::swap(prev_val_, cur_val_);
  prev_valid_ = col.windows;
}

Rational NarrowDp::best_weight(int c) const {
  if (c < 0 || c > columns()) throw ContractViolation("column outside the pushed range");
  return c == 0 ? Rational(0) : table_.column(c).best_value;
}

std::vector<std::size_t> NarrowDp::window_chain(int c) const {
  if (c < 0 || c > columns()) throw ContractViolation("column outside the pushed range");
  std::vector<std::size_t> chain(static_cast<std::size_t>(c));
  if (c == 0) return chain;
  std::size_t w = table_.column(c).best;
  for (int j = c; j >= 1; --j) {
    chain[j - 1] = w;
    w = *table_.pred(j, w);
  }
  return chain;
}

std::vector<std::pair<std::size_t, int>> NarrowDp::extract(int c) const {
  std::vector<std::pair<std::size_t, int>> out;
  const auto chain = window_chain(c);
  for (int j = 1; j <= c; ++j) {
    for (auto row : windows_->last_column_rows(chain[j - 1])) out.emplace_back(row, j);
  }
  return out;
}

namespace {

int max_extent(const std::vector<int>& extents) {
  int m = 1;
  for (int e : extents) m = std::max(m, e);
  return m;
}

}  // namespace

Solution solve_mis_narrow(const NarrowArray& array, const SolverOptions& options, WindowCache* cache) {
  const int omega = effective_omega(array.omega(), array.n(), max_extent(array.row_extents()));
  std::shared_ptr<const WindowSet> windows;
  if (cache != nullptr) {
    windows = cache->line_of_sight(array.row_space(), omega);
  } else {
    windows = std::make_shared<const WindowSet>(
        WindowSet::enumerate(WindowRules::line_of_sight(array.row_space(), omega), options.window_budget));
  }
  NarrowDp dp(windows, options.transition);
  for (int j = 1; j <= array.n(); ++j) dp.push_column(array.column(j));

  Solution sol;
  sol.algorithm = "exact-narrow";
  for (const auto& [row, j] : dp.extract(array.n())) sol.vertices.push_back(array.coords_of(row, j));
  std::sort(sol.vertices.begin(), sol.vertices.end());
  sol.total_weight = dp.best_weight();
  sol.set_meta("long_axis", static_cast<std::int64_t>(array.long_axis()));
  sol.set_meta("windows", static_cast<std::int64_t>(windows->size()));
  return sol;
}

Solution solve_exact_narrow(const LosInstance& inst, const SolverOptions& options, WindowCache* cache) {
  const int axis = options.long_axis.value_or(inst.params().default_long_axis());
  return solve_mis_narrow(build_array(inst, axis), options, cache);
}

}  // namespace los
