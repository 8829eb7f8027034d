#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "los/instance.hpp"
#include "los/options.hpp"
#include "los/windows.hpp"

namespace los {

/// 0-based strip number per cut axis plus its parity.
struct StripIndex {
  std::vector<int> index;
  int parity = 0;

  static StripIndex from(std::vector<int> index);
  bool parity_consistent() const;

  friend bool operator==(const StripIndex&, const StripIndex&) = default;
  friend auto operator<=>(const StripIndex&, const StripIndex&) = default;
};

/// index[t] = ceil(coords[cut_axes[t]] / k) - 1.
StripIndex strip_of(std::span<const int> coords, int k, std::span<const int> cut_axes);

/// All axes except `long_axis`, ascending.
std::vector<int> cut_axes_for(int d, int long_axis);

struct ParityCut {
  LosInstance odd;
  LosInstance even;
};

/// Splits the vertices by strip parity (width-k strips on every axis except
/// the long one).
ParityCut parity_cut(const LosInstance& inst, int k, int long_axis);

/// Inclusive coordinate range on one axis.
struct Range {
  int lo = 1;
  int hi = 0;
  int size() const { return hi - lo + 1; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// Shifted block partition of one axis: a top block of shift*k coordinates,
/// then alternating separators of k and blocks of h*k coordinates. Parts
/// beyond the extent are dropped; the last one may be short.
struct BlockDecomposition {
  int shift = 0;
  int h = 1;
  int axis = 0;
  int k = 1;
  std::vector<Range> blocks;
  std::vector<Range> boundary;
  std::vector<std::vector<std::size_t>> block_vertices;     // indices into inst.vertices()
  std::vector<std::vector<std::size_t>> boundary_vertices;  // parallel to boundary
};

/// Range layout only.
void block_ranges(int extent, int h, int shift, int k, std::vector<Range>& blocks, std::vector<Range>& boundary);

BlockDecomposition make_blocks(const LosInstance& inst, int h, int shift, int axis, int k);

/// Odd/even strip 2-approximation with k = omega - 1. Meta: parity, strips.
Solution solve_strip2(const LosInstance& inst, const SolverOptions& options = {});

/// Smallest integer h >= 1 with (1 + 1/h)^(d-1) <= 1 + epsilon, i.e.
/// ceil(1/epsilon') for epsilon' = (1+epsilon)^(1/(d-1)) - 1, computed exactly.
int ptas_h(const Rational& epsilon, int d);

/// (1+epsilon)^(1/(d-1)) - 1 as a double (reporting only).
double epsilon_prime(double epsilon, int d);

/// Shifted-block scheme. Every axis except the long one is cut in ascending
/// order, each with h+1 shifts; leaves are solved exactly.
/// Meta: h, shift (top level), blocks, block_weights.
Solution solve_ptas(const LosInstance& inst, const Rational& epsilon, const SolverOptions& options = {});

}  // namespace los
