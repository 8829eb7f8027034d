#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "los/adssched.hpp"
#include "los/instance.hpp"
#include "los/windows.hpp"

namespace los {

// Exhaustive reference solvers. Caps are hard: above them a CapacityError is
// thrown rather than returning a partial answer.

inline constexpr std::size_t kBruteMisCap = 24;
inline constexpr std::size_t kPowersetCap = 20;
inline constexpr std::size_t kBruteAdsCap = 20;
inline constexpr std::size_t kBruteWindowCells = 24;

/// Include/exclude branch and bound (bound: current + remaining weight).
/// Among optimal sets returns the lexicographically smallest vertex list.
Solution brute_mis(const LosInstance& inst);

/// Plain enumeration of all 2^|V| subsets, checked pair by pair.
Solution brute_mis_powerset(const LosInstance& inst);

/// Every subset of available (client, time) cells, checked against the gap
/// and capacity rules. Vertices are (client, time).
Solution brute_adssched(const AdsInstance& ads);

/// All rows x omega 0/1 arrays that admit a witness, by the literal
/// definition: entries in one row are >= omega apart, entries in one column
/// lie on rows that do not share a line of sight or are >= omega apart
/// along it. Sorted ascending.
std::vector<FeasibleWindow> brute_windows(const RowSpace& rows, int omega);

struct VerifyReport {
  bool independent = true;
  bool weight_matches = true;
  Rational weight_claimed;
  Rational weight_recomputed;
  std::vector<std::string> violations;

  bool ok() const { return independent && weight_matches; }
};

/// Quadratic pair scan plus exact weight recomputation. Unknown and
/// duplicate coordinates are reported as violations.
VerifyReport verify(const LosInstance& inst, const Solution& sol);

/// Structural check of an AdsSched schedule: availability, per-client gap,
/// per-time capacity, weight.
VerifyReport verify_ads(const AdsInstance& ads, const Solution& sol);

}  // namespace los
