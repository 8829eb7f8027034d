#include "los/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "los/errors.hpp"
#include "los/narrow_dp.hpp"
#include "los/parallel.hpp"

namespace los {

StripIndex StripIndex::from(std::vector<int> index) {
  StripIndex s;
  s.index = std::move(index);
  int sum = 0;
  for (int i : s.index) sum += i;
  s.parity = sum % 2;
  return s;
}

bool StripIndex::parity_consistent() const { return from(index).parity == parity; }

StripIndex strip_of(std::span<const int> coords, int k, std::span<const int> cut_axes) {
  if (k < 1) throw ContractViolation("strip width k must be >= 1");
  std::vector<int> idx;
  idx.reserve(cut_axes.size());
  for (int a : cut_axes) {
    if (a < 0 || static_cast<std::size_t>(a) >= coords.size()) throw ContractViolation("cut axis out of range");
    idx.push_back((coords[a] + k - 1) / k - 1);
  }
  return StripIndex::from(std::move(idx));
}

std::vector<int> cut_axes_for(int d, int long_axis) {
  std::vector<int> out;
  for (int a = 0; a < d; ++a) {
    if (a != long_axis) out.push_back(a);
  }
  return out;
}

ParityCut parity_cut(const LosInstance& inst, int k, int long_axis) {
  const auto cuts = cut_axes_for(inst.d(), long_axis);
  std::vector<Vertex> odd, even;
  for (const Vertex& v : inst.vertices()) {
    (strip_of(v.coords, k, cuts).parity == 1 ? odd : even).push_back(v);
  }
  return {LosInstance(inst.params(), std::move(odd)), LosInstance(inst.params(), std::move(even))};
}

void block_ranges(int extent, int h, int shift, int k, std::vector<Range>& blocks, std::vector<Range>& boundary) {
  if (h < 1 || k < 1 || shift < 0 || shift > h) throw ContractViolation("make_blocks needs h >= 1, k >= 1, 0 <= shift <= h");
  blocks.clear();
  boundary.clear();
  int next = 1;
  if (shift > 0) {
    blocks.push_back({1, std::min(extent, shift * k)});
    next = shift * k + 1;
  }
  while (next <= extent) {
    boundary.push_back({next, std::min(extent, next + k - 1)});
    next += k;
    if (next > extent) break;
    blocks.push_back({next, std::min(extent, next + h * k - 1)});
    next += h * k;
  }
}

BlockDecomposition make_blocks(const LosInstance& inst, int h, int shift, int axis, int k) {
  if (axis < 0 || axis >= inst.d()) throw ContractViolation("cut axis out of range");
  BlockDecomposition bd;
  bd.shift = shift;
  bd.h = h;
  bd.axis = axis;
  bd.k = k;
  block_ranges(inst.extents()[axis], h, shift, k, bd.blocks, bd.boundary);
  bd.block_vertices.resize(bd.blocks.size());
  bd.boundary_vertices.resize(bd.boundary.size());
  auto locate = [](const std::vector<Range>& parts, int c) -> std::ptrdiff_t {
    auto it = std::upper_bound(parts.begin(), parts.end(), c, [](int x, const Range& r) { return x < r.lo; });
    if (it == parts.begin()) return -1;
    --it;
    return c <= it->hi ? it - parts.begin() : -1;
  };
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const int c = inst.vertices()[i].coords[axis];
    if (auto b = locate(bd.blocks, c); b >= 0) {
      bd.block_vertices[b].push_back(i);
    } else {
      bd.boundary_vertices[locate(bd.boundary, c)].push_back(i);
    }
  }
  return bd;
}

namespace {

struct Part {
  std::vector<Coords> vertices;
  Rational weight;
};

SolverOptions leaf_options(const SolverOptions& options, int long_axis) {
  SolverOptions o = options;
  o.long_axis = long_axis;
  o.threads = 1;
  return o;
}

Part exact_part(const LosInstance& inst, const SolverOptions& options, int long_axis, WindowCache& cache) {
  if (inst.empty()) return {};
  Solution s = solve_exact_narrow(inst, leaf_options(options, long_axis), &cache);
  return {std::move(s.vertices), s.total_weight};
}

void translate(std::vector<Coords>& vs, std::span<const int> lo) {
  for (Coords& c : vs) {
    for (std::size_t a = 0; a < c.size(); ++a) c[a] += lo[a] - 1;
  }
}

int long_axis_of(const LosInstance& inst, const SolverOptions& options) {
  const int axis = options.long_axis.value_or(inst.params().default_long_axis());
  if (axis < 0 || axis >= inst.d()) throw ValidationError("long axis " + std::to_string(axis) + " out of range");
  return axis;
}

std::string join_weights(const std::vector<Rational>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ',';
    out += ws[i].to_string();
  }
  return out;
}

}  // namespace

Solution solve_strip2(const LosInstance& inst, const SolverOptions& options) {
  const int k = inst.omega() - 1;
  const int long_axis = long_axis_of(inst, options);
  const auto cuts = cut_axes_for(inst.d(), long_axis);

  std::map<StripIndex, bool> strips;  // ordered by strip index
  for (const Vertex& v : inst.vertices()) strips.emplace(strip_of(v.coords, k, cuts), true);
  std::vector<StripIndex> order;
  for (const auto& [s, _] : strips) order.push_back(s);

  WindowCache cache(options.window_budget);
  auto parts = parallel_map(order.size(), options.threads, [&](std::size_t i) {
    std::vector<int> lo(inst.d(), 1), hi = inst.extents();
    for (std::size_t t = 0; t < cuts.size(); ++t) {
      const int a = cuts[t];
      lo[a] = order[i].index[t] * k + 1;
      hi[a] = std::min(inst.extents()[a], lo[a] + k - 1);
    }
    Part p = exact_part(inst.sub_box(lo, hi), options, long_axis, cache);
    translate(p.vertices, lo);
    return p;
  });

  Part unions[2];
  for (std::size_t i = 0; i < order.size(); ++i) {
    Part& u = unions[order[i].parity];
    u.weight += parts[i].weight;
    u.vertices.insert(u.vertices.end(), parts[i].vertices.begin(), parts[i].vertices.end());
  }
  const int chosen = unions[1].weight > unions[0].weight ? 1 : 0;
  Solution sol;
  sol.algorithm = "strip2";
  sol.vertices = std::move(unions[chosen].vertices);
  std::sort(sol.vertices.begin(), sol.vertices.end());
  sol.total_weight = unions[chosen].weight;
  sol.set_meta("parity", std::string(chosen == 1 ? "odd" : "even"));
  sol.set_meta("strips", static_cast<std::int64_t>(order.size()));
  sol.set_meta("long_axis", static_cast<std::int64_t>(long_axis));
  return sol;
}

int ptas_h(const Rational& epsilon, int d) {
  if (epsilon <= Rational(0)) throw ValidationError("epsilon must be > 0");
  if (d < 2) throw ValidationError("dimension must be >= 2");
  using boost::multiprecision::cpp_int;
  const cpp_int p = epsilon.num(), q = epsilon.den();
  auto fits = [&](std::int64_t h) {
    // (1 + 1/h)^(d-1) <= 1 + p/q  <=>  (h+1)^(d-1) * q <= h^(d-1) * (p+q)
    cpp_int lhs = q, rhs = p + q;
    for (int i = 0; i < d - 1; ++i) {
      lhs *= h + 1;
      rhs *= h;
    }
    return lhs <= rhs;
  };
  constexpr std::int64_t kMaxH = 1 << 30;
  std::int64_t hi = 1;
  while (!fits(hi)) {
    if (hi >= kMaxH) throw CapacityError("epsilon too small: block height h would exceed 2^30");
    hi *= 2;
  }
  std::int64_t lo = hi / 2;  // fits(lo) is false unless lo == 0
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? hi : lo) = mid;
  }
  return static_cast<int>(hi);
}

double epsilon_prime(double epsilon, int d) { return std::pow(1.0 + epsilon, 1.0 / (d - 1)) - 1.0; }

namespace {

struct PtasLevel {
  Part best;
  int shift = 0;
  std::vector<Rational> block_weights;
};

class Ptas {
 public:
  Ptas(const SolverOptions& options, int h, int k, int long_axis, std::vector<int> cuts)
      : options_(options), h_(h), k_(k), long_axis_(long_axis), cuts_(std::move(cuts)), cache_(options.window_budget) {}

  PtasLevel solve(const LosInstance& inst, std::size_t level, unsigned threads) {
    PtasLevel out;
    if (level == cuts_.size()) {
      out.best = exact_part(inst, options_, long_axis_, cache_);
      return out;
    }
    const int axis = cuts_[level];
    auto per_shift = parallel_map(static_cast<std::size_t>(h_) + 1, threads, [&](std::size_t shift) {
      PtasLevel cand;
      cand.shift = static_cast<int>(shift);
      std::vector<Range> blocks, boundary;
      block_ranges(inst.extents()[axis], h_, cand.shift, k_, blocks, boundary);
      for (const Range& r : blocks) {
        std::vector<int> lo(inst.d(), 1), hi = inst.extents();
        lo[axis] = r.lo;
        hi[axis] = r.hi;
        LosInstance sub = inst.sub_box(lo, hi);
        Part p = sub.empty() ? Part{} : solve(sub, level + 1, 1).best;
        translate(p.vertices, lo);
        cand.block_weights.push_back(p.weight);
        cand.best.weight += p.weight;
        cand.best.vertices.insert(cand.best.vertices.end(), p.vertices.begin(), p.vertices.end());
      }
      return cand;
    });
    std::size_t pick = 0;
    for (std::size_t s = 1; s < per_shift.size(); ++s) {
      if (per_shift[s].best.weight > per_shift[pick].best.weight) pick = s;
    }
    return std::move(per_shift[pick]);
  }

 private:
  SolverOptions options_;
  int h_;
  int k_;
  int long_axis_;
  std::vector<int> cuts_;
  WindowCache cache_;
};

}  // namespace

Solution solve_ptas(const LosInstance& inst, const Rational& epsilon, const SolverOptions& options) {
  const int h = ptas_h(epsilon, inst.d());
  const int k = inst.omega() - 1;
  const int long_axis = long_axis_of(inst, options);
  Ptas ptas(options, h, k, long_axis, cut_axes_for(inst.d(), long_axis));
  PtasLevel top = ptas.solve(inst, 0, options.threads);

  Solution sol;
  sol.algorithm = "ptas";
  sol.vertices = std::move(top.best.vertices);
  std::sort(sol.vertices.begin(), sol.vertices.end());
  sol.total_weight = top.best.weight;
  sol.set_meta("epsilon", epsilon.to_string());
  sol.set_meta("h", static_cast<std::int64_t>(h));
  sol.set_meta("shift", static_cast<std::int64_t>(top.shift));
  sol.set_meta("blocks", static_cast<std::int64_t>(top.block_weights.size()));
  sol.set_meta("block_weights", join_weights(top.block_weights));
  sol.set_meta("long_axis", static_cast<std::int64_t>(long_axis));
  return sol;
}

}  // namespace los
