#include "los/generate.hpp"

#include <limits>

#include "los/errors.hpp"

namespace los {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("next_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

WeightDist parse_weight_dist(const std::string& text) {
  if (text.rfind("const:", 0) == 0) {
    ConstWeight c{Rational::parse(text.substr(6))};
    if (c.value <= Rational(0)) throw ValidationError("const weight must be positive");
    return c;
  }
  if (text.rfind("uniform:", 0) == 0) {
    const std::string rest = text.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ValidationError("expected uniform:a:b, got '" + text + "'");
    const Rational a = Rational::parse(rest.substr(0, colon));
    const Rational b = Rational::parse(rest.substr(colon + 1));
    if (!a.is_integer() || !b.is_integer()) throw ValidationError("uniform bounds must be integers");
    if (a > b) throw ValidationError("uniform weight range needs a <= b");
    if (a < Rational(1)) throw ValidationError("uniform weights must be positive");
    return UniformWeight{a.num(), b.num()};
  }
  throw ValidationError("unknown weight distribution '" + text + "'");
}

std::string format_weight_dist(const WeightDist& dist) {
  if (const auto* c = std::get_if<ConstWeight>(&dist)) return "const:" + c->value.to_string();
  const auto& u = std::get<UniformWeight>(dist);
  return "uniform:" + std::to_string(u.lo) + ":" + std::to_string(u.hi);
}

void GenConfig::validate() const {
  params.validate();
  if (!(density >= 0.0 && density <= 1.0)) throw ValidationError("density must lie in [0,1]");
  if (const auto* u = std::get_if<UniformWeight>(&weights)) {
    if (u->lo > u->hi) throw ValidationError("uniform weight range needs a <= b");
    if (u->lo < 1) throw ValidationError("uniform weights must be positive");
  }
}

LosInstance generate(const GenConfig& cfg) {
  cfg.validate();
  const auto& ext = cfg.params.extents;
  SplitMix64 rng(cfg.seed);
  std::vector<Vertex> vertices;
  Coords cell(ext.size(), 1);
  for (;;) {
    if (rng.next_unit() < cfg.density) {
      Vertex v{cell, Rational(1)};
      if (const auto* c = std::get_if<ConstWeight>(&cfg.weights)) {
        v.weight = c->value;
      } else {
        const auto& u = std::get<UniformWeight>(cfg.weights);
        const auto span = static_cast<std::uint64_t>(u.hi - u.lo) + 1;
        v.weight = Rational(u.lo + static_cast<std::int64_t>(rng.next_below(span)));
      }
      vertices.push_back(std::move(v));
    }
    // odometer increment, last axis fastest => lexicographic order
    int a = static_cast<int>(ext.size()) - 1;
    while (a >= 0 && cell[a] == ext[a]) cell[a--] = 1;
    if (a < 0) break;
    ++cell[a];
  }
  return LosInstance(cfg.params, std::move(vertices));
}

}  // namespace los
