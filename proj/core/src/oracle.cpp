#include "los/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "los/errors.hpp"

namespace los {
namespace {

void require_cap(std::size_t size, std::size_t cap, const std::string& what) {
  if (size > cap) {
    throw CapacityError(what + " has " + std::to_string(size) + " elements; the exhaustive oracle is capped at " +
                        std::to_string(cap));
  }
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const LosInstance& inst) : inst_(inst), vs_(inst.vertices()) {
    suffix_.assign(vs_.size() + 1, Rational(0));
    for (std::size_t i = vs_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + vs_[i].weight;
  }

  void run() { dfs(0, Rational(0)); }
  const std::vector<std::size_t>& best() const { return best_; }
  const Rational& best_weight() const { return best_weight_; }

 private:
  void dfs(std::size_t i, const Rational& weight) {
    if (i == vs_.size()) {
      if (weight > best_weight_ || !found_) {
        found_ = true;
        best_weight_ = weight;
        best_ = chosen_;
      }
      return;
    }
    if (found_ && weight + suffix_[i] <= best_weight_) return;
    bool free = true;
    for (std::size_t c : chosen_) {
      if (are_adjacent(vs_[c].coords, vs_[i].coords, inst_.omega())) {
        free = false;
        break;
      }
    }
    if (free) {
      chosen_.push_back(i);
      dfs(i + 1, weight + vs_[i].weight);
      chosen_.pop_back();
    }
    dfs(i + 1, weight);
  }

  const LosInstance& inst_;
  const std::vector<Vertex>& vs_;
  std::vector<Rational> suffix_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  Rational best_weight_;
  bool found_ = false;
};

Solution from_indices(const LosInstance& inst, const std::vector<std::size_t>& idx, const std::string& algo) {
  Solution sol;
  sol.algorithm = algo;
  for (std::size_t i : idx) {
    sol.vertices.push_back(inst.vertices()[i].coords);
    sol.total_weight += inst.vertices()[i].weight;
  }
  return sol;
}

std::vector<std::size_t> mask_indices(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

Solution brute_mis(const LosInstance& inst) {
  require_cap(inst.size(), kBruteMisCap, "instance");
  BranchAndBound bb(inst);
  bb.run();
  return from_indices(inst, bb.best(), "brute");
}

Solution brute_mis_powerset(const LosInstance& inst) {
  const std::size_t n = inst.size();
  require_cap(n, kPowersetCap, "instance");
  const auto& vs = inst.vertices();
  std::vector<std::uint64_t> nbr(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (are_adjacent(vs[a].coords, vs[b].coords, inst.omega())) nbr[a] |= std::uint64_t{1} << b;
    }
  }
  std::vector<std::size_t> best;
  Rational best_w;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    Rational w;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      ok = (nbr[i] & mask) == 0;
      w += vs[i].weight;
    }
    if (!ok) continue;
    auto idx = mask_indices(mask, n);
    if (w > best_w || (w == best_w && idx < best)) {
      best_w = w;
      best = std::move(idx);
    }
  }
  return from_indices(inst, best, "brute-powerset");
}

Solution brute_adssched(const AdsInstance& ads) {
  require_cap(static_cast<std::size_t>(ads.clients()) * static_cast<std::size_t>(ads.times()), kBruteAdsCap,
              "AdsSched matrix");
  std::vector<std::pair<int, int>> cells;
  for (int c = 1; c <= ads.clients(); ++c) {
    for (int t = 1; t <= ads.times(); ++t) {
      if (ads.available(c, t)) cells.emplace_back(c, t);
    }
  }
  const std::size_t m = cells.size();
  std::vector<std::size_t> best;
  Rational best_w;
  std::vector<int> per_time(static_cast<std::size_t>(ads.times()) + 1);
  std::vector<int> last(static_cast<std::size_t>(ads.clients()) + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(per_time.begin(), per_time.end(), 0);
    std::fill(last.begin(), last.end(), 0);
    bool ok = true;
    Rational w;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      const auto [c, t] = cells[i];
      // cells are ordered by client then time, so `last` is the previous airing
      if (last[c] != 0 && t - last[c] < ads.omega()) ok = false;
      if (++per_time[t] > ads.capacity()) ok = false;
      last[c] = t;
      w += ads.weight(c, t);
    }
    if (!ok) continue;
    auto idx = mask_indices(mask, m);
    if (w > best_w || (w == best_w && idx < best)) {
      best_w = w;
      best = std::move(idx);
    }
  }
  Solution sol;
  sol.algorithm = "brute-adssched";
  for (std::size_t i : best) sol.vertices.push_back({cells[i].first, cells[i].second});
  sol.total_weight = best_w;
  return sol;
}

std::vector<FeasibleWindow> brute_windows(const RowSpace& rows, int omega) {
  if (omega < 1) throw ContractViolation("omega must be positive");
  const std::size_t r = rows.size();
  const std::size_t cells = r * static_cast<std::size_t>(omega);
  require_cap(cells, kBruteWindowCells, "window shape");
  std::vector<FeasibleWindow> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    auto bit = [&](std::size_t row, int col) { return (mask >> (row * omega + (col - 1)) & 1U) != 0; };
    bool ok = true;
    for (std::size_t a = 0; a < r && ok; ++a) {
      for (int c1 = 1; c1 <= omega && ok; ++c1) {
        if (!bit(a, c1)) continue;
        // same row: distance c2 - c1 must reach omega, impossible inside the window
        for (int c2 = c1 + 1; c2 <= omega && ok; ++c2) {
          if (bit(a, c2) && c2 - c1 < omega) ok = false;
        }
        // same column, other row
        for (std::size_t b = a + 1; b < r && ok; ++b) {
          if (bit(b, c1) && are_adjacent(rows.row(a), rows.row(b), omega)) ok = false;
        }
      }
    }
    if (!ok) continue;
    FeasibleWindow w;
    w.positions.assign(r, 0);
    for (std::size_t a = 0; a < r; ++a) {
      for (int c = 1; c <= omega; ++c) {
        if (bit(a, c)) w.positions[a] = static_cast<std::uint16_t>(c);
      }
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerifyReport verify(const LosInstance& inst, const Solution& sol) {
  VerifyReport rep;
  rep.weight_claimed = sol.total_weight;
  std::set<Coords> seen;
  std::vector<const Coords*> known;
  for (const Coords& c : sol.vertices) {
    if (static_cast<int>(c.size()) != inst.d() || !inst.contains(c)) {
      rep.violations.push_back("unknown vertex " + format_coords(c));
      continue;
    }
    if (!seen.insert(c).second) {
      rep.violations.push_back("duplicate vertex " + format_coords(c));
      continue;
    }
    rep.weight_recomputed += inst.at(c).weight;
    known.push_back(&c);
  }
  for (std::size_t a = 0; a < known.size(); ++a) {
    for (std::size_t b = a + 1; b < known.size(); ++b) {
      if (are_adjacent(*known[a], *known[b], inst.omega())) {
        rep.violations.push_back("adjacent pair " + format_coords(*known[a]) + " " + format_coords(*known[b]));
      }
    }
  }
  rep.independent = rep.violations.empty();
  rep.weight_matches = rep.weight_claimed == rep.weight_recomputed;
  return rep;
}

VerifyReport verify_ads(const AdsInstance& ads, const Solution& sol) {
  VerifyReport rep;
  rep.weight_claimed = sol.total_weight;
  std::set<std::pair<int, int>> seen;
  std::map<int, std::vector<int>> by_client;
  std::map<int, int> per_time;
  for (const Coords& c : sol.vertices) {
    const std::string name = format_coords(c);
    if (c.size() != 2 || c[0] < 1 || c[0] > ads.clients() || c[1] < 1 || c[1] > ads.times()) {
      rep.violations.push_back("unknown cell " + name);
      continue;
    }
    if (!seen.insert({c[0], c[1]}).second) {
      rep.violations.push_back("duplicate cell " + name);
      continue;
    }
    if (!ads.available(c[0], c[1])) rep.violations.push_back("unavailable cell " + name);
    by_client[c[0]].push_back(c[1]);
    ++per_time[c[1]];
    rep.weight_recomputed += ads.weight(c[0], c[1]);
  }
  for (auto& [client, times] : by_client) {
    std::sort(times.begin(), times.end());
    for (std::size_t i = 1; i < times.size(); ++i) {
      if (times[i] - times[i - 1] < ads.omega()) {
        rep.violations.push_back("client " + std::to_string(client) + " airs at " + std::to_string(times[i - 1]) +
                                 " and " + std::to_string(times[i]));
      }
    }
  }
  for (const auto& [t, count] : per_time) {
    if (count > ads.capacity()) {
      rep.violations.push_back("time " + std::to_string(t) + " has " + std::to_string(count) + " airings");
    }
  }
  rep.independent = rep.violations.empty();
  rep.weight_matches = rep.weight_claimed == rep.weight_recomputed;
  return rep;
}

}  // namespace los
