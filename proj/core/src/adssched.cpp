#include "los/adssched.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "los/errors.hpp"
#include "los/narrow_dp.hpp"

namespace los {

AdsInstance::AdsInstance(int clients, int times, int omega, int capacity)
    : clients_(clients), times_(times), omega_(omega), capacity_(capacity) {
  if (clients_ < 1) throw ValidationError("AdsSched needs at least one client");
  if (times_ < 1) throw ValidationError("AdsSched needs at least one time point");
  if (omega_ < 2) throw ValidationError("omega must be >= 2, got " + std::to_string(omega_));
  if (capacity_ < 1) throw ValidationError("per-time capacity l must be >= 1, got " + std::to_string(capacity_));
  const auto cells = static_cast<std::size_t>(clients_) * static_cast<std::size_t>(times_);
  available_.assign(cells, 0);
  weights_.assign(cells, Rational(1));
}

std::size_t AdsInstance::index(int client, int time) const {
  if (client < 1 || client > clients_ || time < 1 || time > times_) {
    throw LookupError("no AdsSched cell (" + std::to_string(client) + "," + std::to_string(time) + ")");
  }
  return static_cast<std::size_t>(client - 1) * static_cast<std::size_t>(times_) + static_cast<std::size_t>(time - 1);
}

void AdsInstance::set_available(int client, int time, bool on) { available_[index(client, time)] = on ? 1 : 0; }

void AdsInstance::set_weight(int client, int time, Rational w) {
  if (w <= Rational(0)) throw ValidationError("AdsSched weights must be positive");
  weights_[index(client, time)] = w;
}

bool AdsInstance::has_custom_weights() const {
  return std::any_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w != Rational(1); });
}

namespace {

int field_int(const std::string& field, const std::string& key, int line_no) {
  if (field.rfind(key + "=", 0) != 0) {
    throw ValidationError("line " + std::to_string(line_no) + ": expected field '" + key + "='");
  }
  try {
    std::size_t used = 0;
    const int v = std::stoi(field.substr(key.size() + 1), &used);
    if (used != field.size() - key.size() - 1) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("line " + std::to_string(line_no) + ": malformed value in '" + field + "'");
  }
}

}  // namespace

AdsInstance parse_ads(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty() && line.front() != '#') return true;
    }
    return false;
  };
  if (!next() || line != "ads v1") throw ValidationError("expected 'ads v1' header");
  if (!next()) throw ValidationError("missing AdsSched parameter line");
  std::istringstream fields(line);
  std::string f1, f2, f3, f4;
  fields >> f1 >> f2 >> f3 >> f4;
  AdsInstance ads(field_int(f1, "clients", line_no), field_int(f2, "times", line_no), field_int(f3, "omega", line_no),
                  field_int(f4, "l", line_no));
  int client = 0;
  while (next()) {
    std::istringstream tokens(line);
    std::string tag;
    tokens >> tag;
    if (tag == "a") {
      std::string bits;
      tokens >> bits;
      if (++client > ads.clients()) throw ValidationError("line " + std::to_string(line_no) + ": too many clients");
      if (static_cast<int>(bits.size()) != ads.times() || bits.find_first_not_of("01") != std::string::npos) {
        throw ValidationError("line " + std::to_string(line_no) + ": availability must be a 0/1 string of length " +
                              std::to_string(ads.times()));
      }
      for (int t = 1; t <= ads.times(); ++t) ads.set_available(client, t, bits[t - 1] == '1');
    } else if (tag == "w") {
      int c = 0, t = 0;
      std::string w;
      if (!(tokens >> c >> t >> w)) throw ValidationError("line " + std::to_string(line_no) + ": malformed weight line");
      ads.set_weight(c, t, Rational::parse(w));
    } else {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  if (client != ads.clients()) {
    throw ValidationError("expected " + std::to_string(ads.clients()) + " availability lines, got " +
                          std::to_string(client));
  }
  return ads;
}

AdsInstance parse_ads(const std::string& text) {
  std::istringstream in(text);
  return parse_ads(in);
}

AdsInstance read_ads_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open AdsSched file '" + path + "'");
  return parse_ads(in);
}

std::string serialize_ads(const AdsInstance& ads) {
  std::string out = "ads v1\n";
  out += "clients=" + std::to_string(ads.clients()) + " times=" + std::to_string(ads.times()) +
         " omega=" + std::to_string(ads.omega()) + " l=" + std::to_string(ads.capacity()) + "\n";
  for (int c = 1; c <= ads.clients(); ++c) {
    out += "a ";
    for (int t = 1; t <= ads.times(); ++t) out += ads.available(c, t) ? '1' : '0';
    out += "\n";
  }
  for (int c = 1; c <= ads.clients(); ++c) {
    for (int t = 1; t <= ads.times(); ++t) {
      if (ads.weight(c, t) != Rational(1)) {
        out += "w " + std::to_string(c) + " " + std::to_string(t) + " " + ads.weight(c, t).to_string() + "\n";
      }
    }
  }
  return out;
}

Solution solve_adssched(const AdsInstance& ads, const SolverOptions& options) {
  const int omega = effective_omega(ads.omega(), ads.times(), 1);
  const int cap = std::min(ads.capacity(), ads.clients());
  auto windows = std::make_shared<const WindowSet>(
      WindowSet::enumerate(WindowRules::capacity(static_cast<std::size_t>(ads.clients()), omega, cap),
                           options.window_budget));
  NarrowDp dp(windows, options.transition);
  std::vector<Rational> column(static_cast<std::size_t>(ads.clients()));
  for (int t = 1; t <= ads.times(); ++t) {
    for (int c = 1; c <= ads.clients(); ++c) {
      column[c - 1] = ads.available(c, t) ? ads.weight(c, t) : Rational(0);
    }
    dp.push_column(column);
  }
  Solution sol;
  sol.algorithm = "adssched";
  for (const auto& [row, t] : dp.extract(ads.times())) sol.vertices.push_back({static_cast<int>(row) + 1, t});
  std::sort(sol.vertices.begin(), sol.vertices.end());
  sol.total_weight = dp.best_weight();
  sol.set_meta("windows", static_cast<std::int64_t>(windows->size()));
  sol.set_meta("l", static_cast<std::int64_t>(ads.capacity()));
  return sol;
}

}  // namespace los
