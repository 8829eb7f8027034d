#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "los/instance.hpp"

namespace los {

/// The set of row vectors of a narrow array (coordinates along the narrow
/// axes), indexed 0..size()-1 in lexicographic order.
class RowSpace {
 public:
  RowSpace() = default;
  /// Full box {1..e_1} x ... x {1..e_m}.
  static RowSpace box(std::vector<int> extents);
  /// Arbitrary distinct row vectors of a common length, kept in the given order.
  static RowSpace from_rows(std::vector<Coords> rows);

  std::size_t size() const { return rows_.size(); }
  std::size_t dims() const { return dims_; }
  const Coords& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Coords>& rows() const { return rows_; }
  const std::vector<int>& extents() const { return extents_; }  // empty unless box()

  /// Index of a row vector within a box space (mixed radix); box() only.
  std::size_t index_of(std::span<const int> row) const;

  /// Row-pair conflict matrix (size()*size(), row-major): 1 iff the two row
  /// vectors share a line of sight with gap < omega.
  std::vector<std::uint8_t> conflicts(int omega) const;

 private:
  std::vector<Coords> rows_;
  std::vector<int> extents_;
  std::size_t dims_ = 0;
};

/// array(G): vertex weights of a narrow instance laid out as rows x columns,
/// with omega all-zero padding columns j = -(omega-1) .. 0 in front of the
/// data columns 1..n. Cells are 0 where no vertex exists.
class NarrowArray {
 public:
  NarrowArray(RowSpace rows, int n, int omega, int long_axis, std::vector<int> row_axes);

  const RowSpace& row_space() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }
  int n() const { return n_; }
  int omega() const { return omega_; }
  int num_cols() const { return n_ + omega_; }
  int long_axis() const { return long_axis_; }
  const std::vector<int>& row_axes() const { return row_axes_; }
  const std::vector<int>& row_extents() const { return rows_.extents(); }

  /// j in [-(omega-1), n].
  const Rational& at(std::size_t row, int j) const { return cells_[offset(row, j)]; }
  bool occupied(std::size_t row, int j) const { return !at(row, j).is_zero(); }
  void set(std::size_t row, int j, Rational w);

  /// Weights of column j in row order.
  std::vector<Rational> column(int j) const;
  Rational column_sum(int j) const;

  /// Instance coordinates of cell (row, j), j >= 1.
  Coords coords_of(std::size_t row, int j) const;

 private:
  std::size_t offset(std::size_t row, int j) const {
    return row * static_cast<std::size_t>(num_cols()) + static_cast<std::size_t>(j + omega_ - 1);
  }

  RowSpace rows_;
  int n_;
  int omega_;
  int long_axis_;
  std::vector<int> row_axes_;
  std::vector<Rational> cells_;
};

/// Lays `inst` out along `long_axis`; the other axes (ascending) become row
/// coordinates. Works for any extents; the row count is the product of the
/// non-long extents.
NarrowArray build_array(const LosInstance& inst, int long_axis);

/// Sum of all cells.
Rational array_sum(const NarrowArray& a);

}  // namespace los
