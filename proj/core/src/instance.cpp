#include "los/instance.hpp"

#include <algorithm>
#include <set>

#include "los/errors.hpp"

namespace los {

std::string format_coords(const Coords& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

void InstanceParams::validate() const {
  if (d < 2) throw ValidationError("dimension d must be >= 2, got " + std::to_string(d));
  if (omega < 2) throw ValidationError("omega must be >= 2, got " + std::to_string(omega));
  if (static_cast<int>(extents.size()) != d) {
    throw ValidationError("expected " + std::to_string(d) + " extents, got " +
                          std::to_string(extents.size()));
  }
  for (std::size_t a = 0; a < extents.size(); ++a) {
    if (extents[a] < 1) {
      throw ValidationError("extent of axis " + std::to_string(a) + " must be >= 1");
    }
  }
}

int InstanceParams::default_long_axis() const {
  int best = 0;
  for (int a = 1; a < static_cast<int>(extents.size()); ++a) {
    if (extents[a] > extents[best]) best = a;
  }
  return best;
}

bool InstanceParams::is_narrow(int long_axis, int k) const {
  for (int a = 0; a < static_cast<int>(extents.size()); ++a) {
    if (a != long_axis && extents[a] > k) return false;
  }
  return true;
}

bool shares_line_of_sight(std::span<const int> p, std::span<const int> q) {
  if (p.size() != q.size()) {
    throw ContractViolation("coordinate dimension mismatch: " + std::to_string(p.size()) + " vs " +
                            std::to_string(q.size()));
  }
  int differing = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != q[i] && ++differing > 1) return false;
  }
  return differing == 1;
}

bool are_adjacent(std::span<const int> p, std::span<const int> q, int omega) {
  if (p.size() != q.size()) {
    throw ContractViolation("coordinate dimension mismatch: " + std::to_string(p.size()) + " vs " +
                            std::to_string(q.size()));
  }
  int differing = 0;
  int gap = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != q[i]) {
      if (++differing > 1) return false;
      gap = p[i] > q[i] ? p[i] - q[i] : q[i] - p[i];
    }
  }
  return differing == 1 && gap < omega;
}

namespace {

bool coords_less(const Vertex& v, std::span<const int> c) {
  return std::lexicographical_compare(v.coords.begin(), v.coords.end(), c.begin(), c.end());
}

}  // namespace

LosInstance::LosInstance(InstanceParams params, std::vector<Vertex> vertices)
    : params_(std::move(params)), vertices_(std::move(vertices)) {
  params_.validate();
  for (const Vertex& v : vertices_) {
    if (static_cast<int>(v.coords.size()) != params_.d) {
      throw ValidationError("vertex " + format_coords(v.coords) + " has wrong dimension");
    }
    for (int a = 0; a < params_.d; ++a) {
      if (v.coords[a] < 1 || v.coords[a] > params_.extents[a]) {
        throw ValidationError("vertex " + format_coords(v.coords) + " lies outside the grid box");
      }
    }
    if (v.weight <= Rational(0)) {
      throw ValidationError("vertex " + format_coords(v.coords) + " must have positive weight");
    }
  }
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.coords < b.coords; });
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i].coords == vertices_[i - 1].coords) {
      throw ValidationError("duplicate vertex " + format_coords(vertices_[i].coords));
    }
  }
}

std::optional<std::size_t> LosInstance::find(std::span<const int> coords) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), coords, coords_less);
  if (it == vertices_.end() || !std::equal(it->coords.begin(), it->coords.end(), coords.begin(), coords.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

const Vertex& LosInstance::at(std::span<const int> coords) const {
  auto idx = find(coords);
  if (!idx) throw LookupError("no vertex at " + format_coords(Coords(coords.begin(), coords.end())));
  return vertices_[*idx];
}

Rational LosInstance::total_weight() const {
  Rational sum;
  for (const Vertex& v : vertices_) sum += v.weight;
  return sum;
}

bool LosInstance::is_unit_weight() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const Vertex& v) { return v.weight == Rational(1); });
}

LosInstance LosInstance::sub_box(std::span<const int> lo, std::span<const int> hi) const {
  if (static_cast<int>(lo.size()) != params_.d || static_cast<int>(hi.size()) != params_.d) {
    throw ContractViolation("sub_box bounds have wrong dimension");
  }
  InstanceParams sub = params_;
  for (int a = 0; a < params_.d; ++a) {
    if (lo[a] < 1 || hi[a] > params_.extents[a] || lo[a] > hi[a]) {
      throw ContractViolation("sub_box bounds outside the instance on axis " + std::to_string(a));
    }
    sub.extents[a] = hi[a] - lo[a] + 1;
  }
  std::vector<Vertex> inside;
  for (const Vertex& v : vertices_) {
    bool in = true;
    for (int a = 0; a < params_.d && in; ++a) in = v.coords[a] >= lo[a] && v.coords[a] <= hi[a];
    if (!in) continue;
    Vertex t = v;
    for (int a = 0; a < params_.d; ++a) t.coords[a] -= lo[a] - 1;
    inside.push_back(std::move(t));
  }
  return LosInstance(std::move(sub), std::move(inside));
}

// Sweep per axis: sort by (line through the point along `axis`, position on
// the axis); only neighbours in that order can be the closest pair on a line.
bool is_independent(const LosInstance& inst, std::span<const Coords> set) {
  for (const Coords& c : set) inst.at(c);
  std::vector<const Coords*> order;
  order.reserve(set.size());
  for (const Coords& c : set) order.push_back(&c);
  for (int axis = 0; axis < inst.d(); ++axis) {
    auto line_then_axis = [axis](const Coords* a, const Coords* b) {
      for (std::size_t i = 0; i < a->size(); ++i) {
        if (static_cast<int>(i) == axis) continue;
        if ((*a)[i] != (*b)[i]) return (*a)[i] < (*b)[i];
      }
      return (*a)[axis] < (*b)[axis];
    };
    std::sort(order.begin(), order.end(), line_then_axis);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Coords& p = *order[i - 1];
      const Coords& q = *order[i];
      bool same_line = true;
      for (int a = 0; a < inst.d() && same_line; ++a) same_line = a == axis || p[a] == q[a];
      if (same_line && p[axis] != q[axis] && q[axis] - p[axis] < inst.omega()) return false;
    }
  }
  return true;
}

Rational set_weight(const LosInstance& inst, std::span<const Coords> set) {
  std::set<Coords> seen;
  Rational sum;
  for (const Coords& c : set) {
    if (!seen.insert(c).second) throw ValidationError("duplicate coordinate " + format_coords(c));
    sum += inst.at(c).weight;
  }
  return sum;
}

void Solution::set_meta(const std::string& key, MetaValue value) {
  for (auto& [k, v] : meta) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta.emplace_back(key, std::move(value));
}

const MetaValue* Solution::find_meta(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace los
