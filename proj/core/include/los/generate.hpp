#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "los/instance.hpp"

namespace los {

/// SplitMix64 (Steele, Lea & Flood 2014; the seeding generator of
/// xoshiro). The exact output sequence is part of the .losn generation
/// contract: same seed, same instance, on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by rejection (no modulo bias).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct ConstWeight {
  Rational value{1};
};
struct UniformWeight {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};
using WeightDist = std::variant<ConstWeight, UniformWeight>;

/// "const:c" or "uniform:a:b".
WeightDist parse_weight_dist(const std::string& text);
std::string format_weight_dist(const WeightDist& dist);

struct GenConfig {
  InstanceParams params;
  double density = 0.5;
  WeightDist weights = ConstWeight{};
  std::uint64_t seed = 0;

  void validate() const;
};

/// Visits cells in lexicographic coordinate order; each cell draws one
/// next_unit() and hosts a vertex iff the draw is < density, then (for
/// uniform weights only) draws its weight with next_below.
LosInstance generate(const GenConfig& cfg);

}  // namespace los
