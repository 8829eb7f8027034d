#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "los/rational.hpp"

namespace los {

/// 1-based grid coordinates, one entry per axis.
using Coords = std::vector<int>;

std::string format_coords(const Coords& c);

struct InstanceParams {
  int d = 2;
  std::vector<int> extents;  // extents[a] for every axis a
  int omega = 2;

  /// Throws ValidationError unless d >= 2, omega >= 2, extents.size() == d
  /// and every extent >= 1.
  void validate() const;

  /// Axis with the largest extent; ties go to the lowest index.
  int default_long_axis() const;

  /// True when every axis except `long_axis` has extent <= k.
  bool is_narrow(int long_axis, int k) const;

  friend bool operator==(const InstanceParams&, const InstanceParams&) = default;
};

struct Vertex {
  Coords coords;
  Rational weight{1};

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// True iff p != q and they differ in exactly one coordinate.
bool shares_line_of_sight(std::span<const int> p, std::span<const int> q);

/// True iff p and q share a line of sight and the gap along the differing
/// axis is strictly less than omega.
bool are_adjacent(std::span<const int> p, std::span<const int> q, int omega);

/// A weighted LoS network. Edges are implicit (see are_adjacent).
/// Immutable after construction; vertices are kept sorted by coordinates.
class LosInstance {
 public:
  LosInstance() = default;
  /// Validates params and every vertex; rejects duplicate coordinates.
  LosInstance(InstanceParams params, std::vector<Vertex> vertices);

  const InstanceParams& params() const { return params_; }
  int d() const { return params_.d; }
  int omega() const { return params_.omega; }
  const std::vector<int>& extents() const { return params_.extents; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  /// Index into vertices(), or nullopt.
  std::optional<std::size_t> find(std::span<const int> coords) const;
  bool contains(std::span<const int> coords) const { return find(coords).has_value(); }
  /// Throws LookupError naming the tuple when absent.
  const Vertex& at(std::span<const int> coords) const;

  Rational total_weight() const;
  /// True when every vertex weight equals 1.
  bool is_unit_weight() const;

  /// Vertices inside the box [lo, hi] (1-based, inclusive per axis),
  /// translated so that lo maps to (1,...,1). Extents become hi - lo + 1.
  LosInstance sub_box(std::span<const int> lo, std::span<const int> hi) const;

  friend bool operator==(const LosInstance&, const LosInstance&) = default;

 private:
  InstanceParams params_;
  std::vector<Vertex> vertices_;
};

/// True iff no two listed coordinates are adjacent. Throws LookupError for a
/// coordinate that is not a vertex of `inst`.
bool is_independent(const LosInstance& inst, std::span<const Coords> set);

/// Sum of vertex weights over `set`. Throws ValidationError on duplicates and
/// LookupError on unknown coordinates.
Rational set_weight(const LosInstance& inst, std::span<const Coords> set);

using MetaValue = std::variant<std::int64_t, std::string>;

/// Output of every solver: the chosen vertex set plus diagnostics.
struct Solution {
  std::string algorithm;
  std::vector<Coords> vertices;  // sorted lexicographically
  Rational total_weight{0};
  std::vector<std::pair<std::string, MetaValue>> meta;  // insertion-ordered

  void set_meta(const std::string& key, MetaValue value);
  const MetaValue* find_meta(const std::string& key) const;

  friend bool operator==(const Solution&, const Solution&) = default;
};

}  // namespace los
