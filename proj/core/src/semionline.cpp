#include "los/semionline.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

#include "los/errors.hpp"
#include "los/losn_format.hpp"
#include "los/narrow_dp.hpp"

namespace los {

std::optional<std::vector<Rational>> ArrayColumnSource::next() {
  if (next_col_ > array_.n()) return std::nullopt;
  return array_.column(next_col_++);
}

LosnColumnSource::LosnColumnSource(std::istream& in) : in_(in) {
  params_ = parse_losn_header(in_, line_no_);
  params_.validate();
  rows_ = RowSpace::box(std::vector<int>(params_.extents.begin() + 1, params_.extents.end()));
}

bool LosnColumnSource::read_vertex() {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_no_;
    Vertex v;
    if (!parse_losn_vertex_line(raw, params_.d, line_no_, v)) continue;
    for (int a = 0; a < params_.d; ++a) {
      if (v.coords[a] < 1 || v.coords[a] > params_.extents[a]) {
        throw ValidationError("line " + std::to_string(line_no_) + ": vertex " + format_coords(v.coords) +
                              " outside the box");
      }
    }
    if (v.weight <= Rational(0)) {
      throw ValidationError("line " + std::to_string(line_no_) + ": weight must be positive");
    }
    if (!last_.empty() && !(last_ < v.coords)) {
      throw ValidationError("line " + std::to_string(line_no_) +
                            ": vertices must be strictly sorted for streaming, got " + format_coords(v.coords) +
                            " after " + format_coords(last_));
    }
    last_ = v.coords;
    pending_ = std::move(v);
    return true;
  }
  return false;
}

std::optional<std::vector<Rational>> LosnColumnSource::next() {
  if (next_col_ > params_.extents[0]) return std::nullopt;
  std::vector<Rational> column(rows_.size());
  while (pending_ || read_vertex()) {
    if (pending_->coords[0] != next_col_) break;
    column[rows_.index_of(std::span<const int>(pending_->coords).subspan(1))] = pending_->weight;
    pending_.reset();
  }
  ++next_col_;
  return column;
}

Coords LosnColumnSource::coords_of(std::size_t row, int j) const {
  Coords c;
  c.reserve(static_cast<std::size_t>(params_.d));
  c.push_back(j);
  const Coords& r = rows_.row(row);
  c.insert(c.end(), r.begin(), r.end());
  return c;
}

bool ColumnStream::reveal() {
  if (exhausted_) return false;
  auto col = source_.next();
  if (!col) {
    exhausted_ = true;
    return false;
  }
  buffer_.push_back(std::move(*col));
  max_seen_ = std::max(max_seen_, buffer_.size());
  return true;
}

void ColumnStream::consume(std::size_t count) {
  const std::size_t from_buffer = std::min(count, buffer_.size());
  buffer_.erase(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(from_buffer));
  cursor_ += static_cast<int>(from_buffer);
  for (std::size_t i = from_buffer; i < count && !exhausted_; ++i) {
    if (source_.next()) {
      ++cursor_;
    } else {
      exhausted_ = true;
    }
  }
}

std::int64_t phase_round_bound(int k, int d, const Rational& epsilon) {
  if (k < 1 || d < 1 || epsilon <= Rational(0)) throw ValidationError("round bound needs k, d, epsilon > 0");
  const double ln2 = std::numbers::ln2;
  const double bound = (1.0 + 1.0 / epsilon.to_double()) * std::pow(static_cast<double>(k), d - 1) / (ln2 * ln2);
  return static_cast<std::int64_t>(std::ceil(bound));
}

std::int64_t max_lookahead(int k, int d, const Rational& epsilon, int omega) {
  return phase_round_bound(k, d, epsilon) * omega + omega;
}

std::int64_t round_cap_for(const LosInstance& inst, const Rational& epsilon, int long_axis) {
  int k = 1;
  for (int a = 0; a < inst.d(); ++a) {
    if (a != long_axis) k = std::max(k, inst.extents()[a]);
  }
  std::int64_t cap = phase_round_bound(k, inst.d(), epsilon);
  if (!inst.is_unit_weight() && !inst.empty()) {
    Rational w_min = inst.vertices().front().weight;
    for (const Vertex& v : inst.vertices()) w_min = std::min(w_min, v.weight);
    const double ratio = (inst.total_weight() / w_min).to_double();
    const double rounds = std::ceil(std::log(ratio) / std::log1p(epsilon.to_double()));
    cap = std::max<std::int64_t>(cap, static_cast<std::int64_t>(rounds));
  }
  return cap;
}

namespace {

int max_row_extent(const RowSpace& rows) {
  int m = 1;
  for (const Coords& r : rows.rows()) {
    for (int c : r) m = std::max(m, c);
  }
  return m;
}

std::shared_ptr<const WindowSet> windows_for(const ColumnSource& src, const SolverOptions& options) {
  const int omega = effective_omega(src.omega(), src.length(), max_row_extent(src.rows()));
  return std::make_shared<const WindowSet>(
      WindowSet::enumerate(WindowRules::line_of_sight(src.rows(), omega), options.window_budget));
}

}  // namespace

PhaseState run_phase(ColumnStream& stream, const SemiOnlineParams& params) {
  ColumnSource& src = stream.source();
  auto windows = params.windows ? params.windows : windows_for(src, params.solver);
  const int omega = src.omega();
  const Rational growth = Rational(1) + params.epsilon;

  PhaseState ph;
  ph.j0 = stream.cursor();
  NarrowDp dp(windows, params.solver.transition);
  std::size_t pushed = 0;
  auto push_upto = [&](std::size_t count) {
    while (pushed < count) {
      if (pushed >= stream.lookahead() && !stream.reveal()) return false;
      dp.push_column(stream.peek(pushed));
      ++pushed;
    }
    return true;
  };
  auto keep = [&](int cols) {
    ph.current_weight = dp.best_weight(cols);
    for (const auto& [row, j] : dp.extract(cols)) ph.best_set.push_back(src.coords_of(row, ph.j0 + j - 1));
    if (params.debug_resolve) {
      NarrowDp fresh(windows, TransitionStrategy::kSuccessorScan);
      for (int c = 0; c < cols; ++c) fresh.push_column(stream.peek(static_cast<std::size_t>(c)));
      if (fresh.best_weight() != ph.current_weight || fresh.extract(cols) != dp.extract(cols)) {
        throw std::logic_error("incremental DP disagrees with a fresh solve at phase " + std::to_string(ph.j0));
      }
    }
  };

  if (!push_upto(1)) {
    ph.stopped = true;
    ph.final = true;
    return ph;
  }
  ph.round_weights.push_back(dp.best_weight(1));
  if (ph.round_weights[0].is_zero()) {
    // Empty column: nothing to keep, move on by one.
    ph.stopped = true;
    ph.lookahead_used = stream.lookahead();
    stream.consume(1);
    return ph;
  }

  int r = 0;
  for (;;) {
    if (r >= params.round_cap) {
      ph.forced = true;
      break;
    }
    const std::size_t need = static_cast<std::size_t>(r + 1) * static_cast<std::size_t>(omega);
    if (!push_upto(need)) {
      // Input ended mid-round: nothing follows, so keep the optimum over
      // everything revealed in this phase.
      ph.final = true;
      ph.r = r;
      ph.stopped = true;
      keep(static_cast<int>(pushed));
      ph.lookahead_used = stream.lookahead();
      stream.consume(pushed);
      return ph;
    }
    const Rational next = dp.best_weight(static_cast<int>(need));
    ph.round_weights.push_back(next);
    if (next < growth * ph.round_weights[static_cast<std::size_t>(r)]) break;
    ++r;
  }
  ph.r = r;
  ph.stopped = true;
  keep(r == 0 ? 1 : r * omega);
  ph.lookahead_used = stream.lookahead();
  stream.consume(static_cast<std::size_t>(r + 1) * static_cast<std::size_t>(omega));
  return ph;
}

SemiOnlineResult solve_semionline(ColumnStream& stream, const SemiOnlineParams& params) {
  if (params.epsilon <= Rational(0)) throw ValidationError("epsilon must be > 0");
  if (params.round_cap < 1) throw ValidationError("round cap must be >= 1");
  SemiOnlineParams p = params;
  if (!p.windows) p.windows = windows_for(stream.source(), p.solver);

  SemiOnlineResult out;
  Solution& sol = out.solution;
  sol.algorithm = "semionline";
  std::int64_t forced = 0;
  while (stream.lookahead() > 0 || stream.reveal()) {
    PhaseState ph = run_phase(stream, p);
    sol.total_weight += ph.current_weight;
    sol.vertices.insert(sol.vertices.end(), ph.best_set.begin(), ph.best_set.end());
    forced += ph.forced ? 1 : 0;
    out.phases.push_back(std::move(ph));
  }
  std::sort(sol.vertices.begin(), sol.vertices.end());
  sol.set_meta("epsilon", p.epsilon.to_string());
  sol.set_meta("phases", static_cast<std::int64_t>(out.phases.size()));
  sol.set_meta("max_lookahead", p.round_cap * stream.source().omega() + stream.source().omega());
  sol.set_meta("lookahead_peak", static_cast<std::int64_t>(stream.max_lookahead_seen()));
  sol.set_meta("forced_stops", forced);
  return out;
}

SemiOnlineResult solve_semionline(const LosInstance& inst, const Rational& epsilon, const SolverOptions& options) {
  const int long_axis = options.long_axis.value_or(inst.params().default_long_axis());
  ArrayColumnSource src(build_array(inst, long_axis));
  ColumnStream stream(src);
  SemiOnlineParams params;
  params.epsilon = epsilon;
  params.round_cap = round_cap_for(inst, epsilon, long_axis);
  params.solver = options;
  SemiOnlineResult res = solve_semionline(stream, params);
  res.solution.set_meta("long_axis", static_cast<std::int64_t>(long_axis));
  return res;
}

std::string phase_trace_line(const PhaseState& phase) {
  nlohmann::ordered_json j;
  j["j0"] = phase.j0;
  j["r_star"] = phase.r;
  j["weight"] = phase.current_weight.to_fraction_string();
  j["lookahead_used"] = phase.lookahead_used;
  return j.dump();
}

}  // namespace los
