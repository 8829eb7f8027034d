#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "los/instance.hpp"
#include "los/narrow_array.hpp"
#include "los/options.hpp"

namespace los {

/// Columns of a narrow instance in increasing order along the long axis.
class ColumnSource {
 public:
  virtual ~ColumnSource() = default;
  virtual const RowSpace& rows() const = 0;
  virtual int omega() const = 0;
  /// Total number of columns n (known from the header or the array).
  virtual int length() const = 0;
  /// Next column (one weight per row, 0 = empty) or nullopt at the end.
  virtual std::optional<std::vector<Rational>> next() = 0;
  /// Instance coordinates of (row, column j).
  virtual Coords coords_of(std::size_t row, int j) const = 0;
};

/// Serves the columns of an in-memory array.
class ArrayColumnSource : public ColumnSource {
 public:
  explicit ArrayColumnSource(NarrowArray array) : array_(std::move(array)) {}
  const RowSpace& rows() const override { return array_.row_space(); }
  int omega() const override { return array_.omega(); }
  int length() const override { return array_.n(); }
  std::optional<std::vector<Rational>> next() override;
  Coords coords_of(std::size_t row, int j) const override { return array_.coords_of(row, j); }

 private:
  NarrowArray array_;
  int next_col_ = 1;
};

/// Reads a .losn stream incrementally; axis 0 is the column axis, which
/// matches the file's lexicographic vertex order. Never looks past the
/// column being served (one line of read-ahead).
class LosnColumnSource : public ColumnSource {
 public:
  explicit LosnColumnSource(std::istream& in);
  const InstanceParams& params() const { return params_; }
  const RowSpace& rows() const override { return rows_; }
  int omega() const override { return params_.omega; }
  int length() const override { return params_.extents[0]; }
  std::optional<std::vector<Rational>> next() override;
  Coords coords_of(std::size_t row, int j) const override;

 private:
  bool read_vertex();

  std::istream& in_;
  int line_no_ = 0;
  InstanceParams params_;
  RowSpace rows_;
  int next_col_ = 1;
  std::optional<Vertex> pending_;
  Coords last_;
};

/// Reveal/consume wrapper that records how many columns are held at once.
class ColumnStream {
 public:
  explicit ColumnStream(ColumnSource& source) : source_(source) {}

  ColumnSource& source() { return source_; }
  /// Reveals one more column; false at the end of the input.
  bool reveal();
  bool exhausted() const { return exhausted_; }
  /// Column number of the oldest unconsumed column.
  int cursor() const { return cursor_; }
  /// Revealed but not yet consumed.
  std::size_t lookahead() const { return buffer_.size(); }
  std::size_t max_lookahead_seen() const { return max_seen_; }
  /// i-th unconsumed column (0 = cursor).
  const std::vector<Rational>& peek(std::size_t i) const { return buffer_.at(i); }
  /// Drops the oldest `count` columns. Columns not yet revealed are read
  /// and thrown away without entering the buffer.
  void consume(std::size_t count);

 private:
  ColumnSource& source_;
  std::deque<std::vector<Rational>> buffer_;
  int cursor_ = 1;
  bool exhausted_ = false;
  std::size_t max_seen_ = 0;
};

/// ceil((1 + 1/epsilon) k^(d-1) / (ln 2)^2): rounds any unit-weight phase
/// can run before it must stop.
std::int64_t phase_round_bound(int k, int d, const Rational& epsilon);

/// Columns a phase may hold: round_bound * omega + omega.
std::int64_t max_lookahead(int k, int d, const Rational& epsilon, int omega);

struct SemiOnlineParams {
  Rational epsilon{1};
  /// Rounds after which a phase is stopped regardless of the gain.
  std::int64_t round_cap = 0;
  /// Re-solve each I_r from scratch and compare with the incremental DP.
  bool debug_resolve = false;
  SolverOptions solver;
  /// Window set for the stream's rows; built on first use when null.
  std::shared_ptr<const WindowSet> windows;
};

/// Round cap for `inst`: the unit-weight round bound, raised to
/// ceil(log_{1+eps}(W_total / w_min)) for non-unit weights.
std::int64_t round_cap_for(const LosInstance& inst, const Rational& epsilon, int long_axis);

struct PhaseState {
  int j0 = 1;
  int r = 0;                 // stopping round r*
  Rational current_weight;   // w(I_{r*})
  std::vector<Coords> best_set;
  bool stopped = false;
  bool forced = false;       // hit the round cap
  bool final = false;        // input ended inside the phase
  std::size_t lookahead_used = 0;
  std::vector<Rational> round_weights;  // w(I_0), w(I_1), ...
};

/// Runs one phase from the stream cursor and consumes its columns,
/// including the discarded separator block.
PhaseState run_phase(ColumnStream& stream, const SemiOnlineParams& params);

struct SemiOnlineResult {
  Solution solution;
  std::vector<PhaseState> phases;
};

SemiOnlineResult solve_semionline(ColumnStream& stream, const SemiOnlineParams& params);
/// In-memory convenience form along options.long_axis (or the default).
SemiOnlineResult solve_semionline(const LosInstance& inst, const Rational& epsilon,
                                  const SolverOptions& options = {});

/// One JSON object per phase: {"j0","r_star","weight","lookahead_used"}.
std::string phase_trace_line(const PhaseState& phase);

}  // namespace los
