#include "los/narrow_array.hpp"

#include <set>

#include "los/errors.hpp"

namespace los {

RowSpace RowSpace::box(std::vector<int> extents) {
  if (extents.empty()) throw ContractViolation("row space needs at least one narrow axis");
  RowSpace space;
  space.dims_ = extents.size();
  std::size_t total = 1;
  for (int e : extents) {
    if (e < 1) throw ContractViolation("row extents must be >= 1");
    total *= static_cast<std::size_t>(e);
  }
  space.rows_.reserve(total);
  Coords cur(extents.size(), 1);
  for (std::size_t i = 0; i < total; ++i) {
    space.rows_.push_back(cur);
    for (int a = static_cast<int>(cur.size()) - 1; a >= 0; --a) {
      if (cur[a] < extents[a]) {
        ++cur[a];
        break;
      }
      cur[a] = 1;
    }
  }
  space.extents_ = std::move(extents);
  return space;
}

RowSpace RowSpace::from_rows(std::vector<Coords> rows) {
  RowSpace space;
  if (!rows.empty()) space.dims_ = rows.front().size();
  std::set<Coords> seen;
  for (const Coords& r : rows) {
    if (r.size() != space.dims_) throw ContractViolation("row vectors must share a dimension");
    if (!seen.insert(r).second) throw ContractViolation("duplicate row vector " + format_coords(r));
  }
  space.rows_ = std::move(rows);
  return space;
}

std::size_t RowSpace::index_of(std::span<const int> row) const {
  if (extents_.empty() || row.size() != extents_.size()) {
    throw ContractViolation("index_of needs a box row space of matching dimension");
  }
  std::size_t idx = 0;
  for (std::size_t a = 0; a < row.size(); ++a) idx = idx * static_cast<std::size_t>(extents_[a]) + (row[a] - 1);
  return idx;
}

std::vector<std::uint8_t> RowSpace::conflicts(int omega) const {
  const std::size_t r = rows_.size();
  std::vector<std::uint8_t> m(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (are_adjacent(rows_[i], rows_[j], omega)) m[i * r + j] = m[j * r + i] = 1;
    }
  }
  return m;
}

NarrowArray::NarrowArray(RowSpace rows, int n, int omega, int long_axis, std::vector<int> row_axes)
    : rows_(std::move(rows)), n_(n), omega_(omega), long_axis_(long_axis), row_axes_(std::move(row_axes)) {
  if (n_ < 0 || omega_ < 2) throw ContractViolation("narrow array needs n >= 0 and omega >= 2");
  cells_.assign(rows_.size() * static_cast<std::size_t>(num_cols()), Rational(0));
}

void NarrowArray::set(std::size_t row, int j, Rational w) {
  if (j < 1 || j > n_) throw ContractViolation("padding columns stay zero");
  cells_[offset(row, j)] = w;
}

std::vector<Rational> NarrowArray::column(int j) const {
  std::vector<Rational> col(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) col[r] = at(r, j);
  return col;
}

Rational NarrowArray::column_sum(int j) const {
  Rational s;
  for (std::size_t r = 0; r < rows_.size(); ++r) s += at(r, j);
  return s;
}

Coords NarrowArray::coords_of(std::size_t row, int j) const {
  Coords c(row_axes_.size() + 1, 0);
  c[long_axis_] = j;
  const Coords& rv = rows_.row(row);
  for (std::size_t i = 0; i < row_axes_.size(); ++i) c[row_axes_[i]] = rv[i];
  return c;
}

NarrowArray build_array(const LosInstance& inst, int long_axis) {
  if (long_axis < 0 || long_axis >= inst.d()) {
    throw ValidationError("long axis " + std::to_string(long_axis) + " out of range for d=" +
                          std::to_string(inst.d()));
  }
  std::vector<int> row_axes;
  std::vector<int> row_extents;
  for (int a = 0; a < inst.d(); ++a) {
    if (a == long_axis) continue;
    row_axes.push_back(a);
    row_extents.push_back(inst.extents()[a]);
  }
  NarrowArray arr(RowSpace::box(row_extents), inst.extents()[long_axis], inst.omega(), long_axis, row_axes);
  Coords rv(row_axes.size());
  for (const Vertex& v : inst.vertices()) {
    for (std::size_t i = 0; i < row_axes.size(); ++i) rv[i] = v.coords[row_axes[i]];
    arr.set(arr.row_space().index_of(rv), v.coords[long_axis], v.weight);
  }
  return arr;
}

Rational array_sum(const NarrowArray& a) {
  Rational s;
  for (int j = -(a.omega() - 1); j <= a.n(); ++j) s += a.column_sum(j);
  return s;
}

}  // namespace los
