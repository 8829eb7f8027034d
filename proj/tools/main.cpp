// los: generate, solve, verify and benchmark LoS network instances.
//
// Exit codes: 0 ok, 2 invalid input or arguments, 3 capacity bound hit,
// 1 anything else (including a solver output that fails verification).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "los/adssched.hpp"
#include "los/decomp.hpp"
#include "los/errors.hpp"
#include "los/generate.hpp"
#include "los/losn_format.hpp"
#include "los/narrow_dp.hpp"
#include "los/oracle.hpp"
#include "los/semionline.hpp"
#include "los/solution_json.hpp"

namespace {

using namespace los;

const std::vector<std::string> kAlgorithms = {"exact-narrow", "brute", "strip2", "ptas", "semionline", "adssched"};

std::size_t window_budget_from_env() {
  const char* raw = std::getenv("LOS_WINDOW_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultWindowBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ValidationError(std::string("LOS_WINDOW_BUDGET must be a positive integer, got '") + raw + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ValidationError(what + ": '" + part + "' is not an integer");
    }
  }
  if (out.empty()) throw ValidationError(what + " is empty");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_ads_path(const std::string& path) { return std::filesystem::path(path).extension() == ".ads"; }

// ---------------------------------------------------------------- gen

struct GenArgs {
  int d = 2;
  std::string extents;
  int omega = 2;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string weights = "const:1";
  std::string out;
};

int run_gen(const GenArgs& a) {
  GenConfig cfg;
  cfg.params.d = a.d;
  cfg.params.extents = parse_int_list(a.extents, "--extents");
  cfg.params.omega = a.omega;
  cfg.density = a.density;
  cfg.seed = a.seed;
  cfg.weights = parse_weight_dist(a.weights);
  const std::string text = serialize_losn(generate(cfg));
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + a.out + "'");
    f << text;
  }
  return 0;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string algo;
  std::string file;
  std::string epsilon = "1";
  std::optional<int> long_axis;
  bool json = false;
  bool trace_phases = false;
  unsigned threads = 1;
  bool with_float = false;
  bool timing = false;
};

void print_text(const RunReport& r, std::ostream& os) {
  const Solution& s = r.solution;
  os << "algorithm: " << s.algorithm << "\n";
  os << "weight: " << s.total_weight.to_string() << "\n";
  if (r.with_float) os << "weight_float: " << s.total_weight.to_double() << "\n";
  os << "vertices: " << s.vertices.size() << "\n";
  for (const auto& [k, v] : s.meta) {
    os << k << ": ";
    std::visit([&](const auto& x) { os << x; }, v);
    os << "\n";
  }
  os << "digest: " << r.digest << "\n";
  if (r.wall_ms) os << "wall_ms: " << *r.wall_ms << "\n";
  for (const Coords& c : s.vertices) os << format_coords(c) << "\n";
}

int run_solve(const SolveArgs& a) {
  if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a.algo) == kAlgorithms.end()) {
    throw ValidationError("unknown algorithm '" + a.algo + "'");
  }
  SolverOptions opts;
  opts.window_budget = window_budget_from_env();
  opts.threads = std::max(1u, a.threads);
  opts.long_axis = a.long_axis;
  const Rational eps = Rational::parse(a.epsilon);
  if ((a.algo == "ptas" || a.algo == "semionline") && eps <= Rational(0)) {
    throw ValidationError("--epsilon must be > 0");
  }

  RunReport report;
  report.command = "solve " + a.algo + " " + a.file;
  report.with_float = a.with_float;
  report.params.emplace_back("algorithm", a.algo);
  std::vector<std::string> trace;
  const auto t0 = std::chrono::steady_clock::now();

  if (a.algo == "adssched") {
    const AdsInstance ads = parse_ads(read_file(a.file));
    report.digest = digest_hex(serialize_ads(ads));
    report.params.emplace_back("l", std::to_string(ads.capacity()));
    report.solution = solve_adssched(ads, opts);
    const VerifyReport v = verify_ads(ads, report.solution);
    if (!v.ok()) throw std::logic_error("adssched output failed verification");
  } else {
    const LosInstance inst = parse_losn(read_file(a.file));
    report.digest = digest_hex(serialize_losn(inst));
    const int axis = a.long_axis.value_or(inst.params().default_long_axis());
    if (axis < 0 || axis >= inst.d()) throw ValidationError("--long-axis must be in [0, d)");
    opts.long_axis = axis;
    report.params.emplace_back("long_axis", std::to_string(axis));
    if (a.algo == "ptas" || a.algo == "semionline") report.params.emplace_back("epsilon", eps.to_string());

    if (a.algo == "exact-narrow") {
      report.solution = solve_exact_narrow(inst, opts);
    } else if (a.algo == "brute") {
      report.solution = brute_mis(inst);
    } else if (a.algo == "strip2") {
      report.solution = solve_strip2(inst, opts);
    } else if (a.algo == "ptas") {
      report.solution = solve_ptas(inst, eps, opts);
    } else {
      SemiOnlineResult res;
      if (axis == 0) {
        // stream the file column by column
        std::ifstream in(a.file, std::ios::binary);
        LosnColumnSource src(in);
        ColumnStream stream(src);
        SemiOnlineParams p;
        p.epsilon = eps;
        p.round_cap = round_cap_for(inst, eps, axis);
        p.solver = opts;
        res = solve_semionline(stream, p);
        res.solution.set_meta("long_axis", std::int64_t{0});
      } else {
        res = solve_semionline(inst, eps, opts);
      }
      report.solution = std::move(res.solution);
      for (const PhaseState& ph : res.phases) trace.push_back(phase_trace_line(ph));
    }
    const VerifyReport v = verify(inst, report.solution);
    if (!v.ok()) throw std::logic_error(a.algo + " output failed verification");
  }

  if (a.timing) {
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  if (a.trace_phases) {
    for (const auto& line : trace) std::cout << line << "\n";
  }
  if (a.json || a.trace_phases) {
    // with a phase trace the report is one more JSON line
    std::cout << run_report_json(report, a.trace_phases ? -1 : 2) << "\n";
  } else {
    print_text(report, std::cout);
  }
  return 0;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& instance_path, const std::string& solution_path) {
  const Solution sol = read_solution_file(solution_path);
  const VerifyReport rep = is_ads_path(instance_path) ? verify_ads(parse_ads(read_file(instance_path)), sol)
                                                      : verify(parse_losn(read_file(instance_path)), sol);
  nlohmann::ordered_json j;
  j["independent"] = rep.independent;
  j["weight_claimed"] = rep.weight_claimed.to_fraction_string();
  j["weight_recomputed"] = rep.weight_recomputed.to_fraction_string();
  j["weight_matches"] = rep.weight_matches;
  j["violations"] = rep.violations;
  std::cout << j.dump(2) << "\n";
  if (!rep.ok()) {
    std::cerr << "verification failed: " << rep.violations.size() << " violation(s)"
              << (rep.weight_matches ? "" : ", weight mismatch") << "\n";
    return 2;
  }
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchRow {
  std::uint64_t seed;
  int n;
  int k;
  int omega;
  std::string algo;
  std::string epsilon;
  Rational weight;
  std::optional<double> ratio;
  double ms;
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ValidationError("--seeds expects a..b, got '" + text + "'");
  }
}

template <typename Fn>
std::pair<Solution, double> timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Solution s = fn();
  return {std::move(s), std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()};
}

LosInstance bench_instance(int n, int k, int omega, double density, const std::string& weights, std::uint64_t seed) {
  GenConfig cfg;
  cfg.params = {2, {n, k}, omega};
  cfg.density = density;
  cfg.weights = parse_weight_dist(weights);
  cfg.seed = seed;
  return generate(cfg);
}

void bench_linearity(std::uint64_t seed, const SolverOptions& opts, std::vector<BenchRow>& rows) {
  for (int n : {250, 500, 1000, 2000}) {
    const LosInstance inst = bench_instance(n, 2, 3, 0.5, "const:1", seed);
    auto [sol, ms] = timed([&] { return solve_exact_narrow(inst, opts); });
    rows.push_back({seed, n, 2, 3, "exact-narrow", "", sol.total_weight, std::nullopt, ms});
  }
}

void bench_ratio(std::uint64_t seed, const SolverOptions& opts, std::vector<BenchRow>& rows) {
  const int n = 40, k = 4, omega = 3;
  const LosInstance inst = bench_instance(n, k, omega, 0.6, "uniform:1:5", seed);
  auto [exact, exact_ms] = timed([&] { return solve_exact_narrow(inst, opts); });
  rows.push_back({seed, n, k, omega, "exact-narrow", "", exact.total_weight, 1.0, exact_ms});
  auto add = [&](const std::string& algo, const std::string& eps, const std::function<Solution()>& fn) {
    auto [sol, ms] = timed(fn);
    const auto rep = verify(inst, sol);
    if (!rep.ok()) throw std::logic_error(algo + " output failed verification in bench");
    std::optional<double> ratio;
    if (!exact.total_weight.is_zero()) ratio = (sol.total_weight / exact.total_weight).to_double();
    rows.push_back({seed, n, k, omega, algo, eps, sol.total_weight, ratio, ms});
  };
  add("strip2", "", [&] { return solve_strip2(inst, opts); });
  for (const char* e : {"1", "1/2", "1/4"}) {
    add("ptas", e, [&] { return solve_ptas(inst, Rational::parse(e), opts); });
  }
  for (const char* e : {"1", "1/2"}) {
    add("semionline", e, [&] { return solve_semionline(inst, Rational::parse(e), opts).solution; });
  }
}

int run_bench(const std::string& suite, const std::string& seeds, unsigned threads) {
  if (suite != "linearity" && suite != "ratio") throw ValidationError("unknown bench suite '" + suite + "'");
  const auto [lo, hi] = parse_seed_range(seeds);
  SolverOptions opts;
  opts.window_budget = window_budget_from_env();
  opts.threads = std::max(1u, threads);
  std::cout << "seed,n,k,omega,algo,epsilon,weight,ratio,ms\n";
  for (std::uint64_t s = lo; s <= hi && lo <= hi; ++s) {
    std::vector<BenchRow> rows;
    if (suite == "linearity") {
      bench_linearity(s, opts, rows);
    } else {
      bench_ratio(s, opts, rows);
    }
    for (const BenchRow& r : rows) {
      std::cout << r.seed << ',' << r.n << ',' << r.k << ',' << r.omega << ',' << r.algo << ',' << r.epsilon << ','
                << r.weight.to_string() << ',';
      if (r.ratio) std::cout << std::fixed << std::setprecision(6) << *r.ratio;
      std::cout << ',' << std::fixed << std::setprecision(3) << r.ms << std::defaultfloat << '\n';
    }
    if (s == hi) break;  // hi may be UINT64_MAX
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers for line-of-sight network instances"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "los 0.1.0");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a random instance (.losn)");
  g->add_option("--d", gen.d, "Dimension")->default_val(2);
  g->add_option("--extents", gen.extents, "Comma-separated extent per axis")->required();
  g->add_option("--omega", gen.omega, "Range parameter")->required();
  g->add_option("--density", gen.density, "Probability that a cell hosts a vertex")->default_val(0.5);
  g->add_option("--seed", gen.seed, "SplitMix64 seed")->default_val(0);
  g->add_option("--weights", gen.weights, "const:c or uniform:a:b")->default_val("const:1");
  g->add_option("-o,--output", gen.out, "Output file (stdout if omitted)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance");
  s->add_option("algo", solve.algo, "exact-narrow | brute | strip2 | ptas | semionline | adssched")->required();
  s->add_option("file", solve.file, ".losn instance (.ads for adssched)")->required()->check(CLI::ExistingFile);
  s->add_option("--epsilon", solve.epsilon, "Accuracy for ptas and semionline (decimal or p/q)")->default_val("1");
  s->add_option("--long-axis", solve.long_axis, "Column axis (default: largest extent)");
  s->add_flag("--json", solve.json, "Print the run report as JSON");
  s->add_flag("--trace-phases", solve.trace_phases, "semionline: one JSON line per phase, then the report");
  s->add_option("--threads", solve.threads, "Workers for strip and block subproblems")->default_val(1);
  s->add_flag("--float", solve.with_float, "Add a decimal weight next to the exact one");
  s->add_flag("--timing", solve.timing, "Include wall time (makes output run-dependent)");

  std::string verify_instance, verify_solution;
  auto* v = app.add_subcommand("verify", "Check a solution against an instance");
  v->add_option("instance", verify_instance, ".losn or .ads file")->required()->check(CLI::ExistingFile);
  v->add_option("solution", verify_solution, "Solution or run report JSON")->required()->check(CLI::ExistingFile);

  std::string suite, seeds = "1..5";
  unsigned bench_threads = 1;
  auto* b = app.add_subcommand("bench", "Print a benchmark table as CSV");
  b->add_option("--suite", suite, "linearity | ratio")->required();
  b->add_option("--seeds", seeds, "Seed range a..b")->default_val("1..5");
  b->add_option("--threads", bench_threads, "Workers")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*g) return run_gen(gen);
    if (*s) return run_solve(solve);
    if (*v) return run_verify(verify_instance, verify_solution);
    if (*b) return run_bench(suite, seeds, bench_threads);
  } catch (const CapacityError& e) {
    std::cerr << "los: capacity exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "los: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "los: error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
