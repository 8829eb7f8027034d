#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "los/errors.hpp"
#include "los/losn_format.hpp"
#include "los/narrow_dp.hpp"
#include "los/oracle.hpp"
#include "los/semionline.hpp"
#include "test_support.hpp"

using namespace los;
using los::test::full_instance;
using los::test::make_instance;

TEST(Lookahead, RoundBoundExamples) {
  EXPECT_EQ(phase_round_bound(2, 2, Rational(1)), 9);
  EXPECT_EQ(max_lookahead(2, 2, Rational(1), 3), 9 * 3 + 3);
  EXPECT_EQ(phase_round_bound(1, 2, Rational(1)), 5);
  EXPECT_EQ(max_lookahead(1, 2, Rational(1), 2), 12);
  // large epsilon approaches k^(d-1) / (ln 2)^2
  const double limit = 4.0 / (std::log(2.0) * std::log(2.0));
  EXPECT_EQ(phase_round_bound(2, 3, Rational(1000000)), static_cast<std::int64_t>(std::ceil(limit)));
}

TEST(SemiOnline, EmptyStreamIsOnePhasePerColumn) {
  const auto res = solve_semionline(make_instance(2, {7, 2}, {}), Rational(1));
  EXPECT_EQ(res.solution.total_weight, Rational(0));
  EXPECT_EQ(res.phases.size(), 7u);
  for (const auto& ph : res.phases) {
    EXPECT_EQ(ph.current_weight, Rational(0));
    EXPECT_EQ(ph.lookahead_used, 1u);
  }
}

TEST(SemiOnline, UnitPathTrace) {
  // k=1, omega=2, every column occupied, eps=1: I_0 = 1, I_1 = 1 < 2, so
  // r* = 0 each time and the next phase starts two columns later.
  const auto res = solve_semionline(full_instance(2, {10, 1}), Rational(1));
  ASSERT_EQ(res.phases.size(), 5u);
  for (std::size_t i = 0; i < res.phases.size(); ++i) {
    EXPECT_EQ(res.phases[i].j0, static_cast<int>(1 + 2 * i));
    EXPECT_EQ(res.phases[i].r, 0);
    EXPECT_EQ(res.phases[i].current_weight, Rational(1));
    EXPECT_EQ(res.phases[i].round_weights, (std::vector<Rational>{1, 1}));
  }
  EXPECT_EQ(res.solution.total_weight, Rational(5));
}

TEST(SemiOnline, GrowingWeightsKeepThePhaseGoing) {
  // one row, omega 2; I_0..I_4 = 1, 2, 4, 8, 13 and eps = 0.9
  const auto inst = make_instance(2, {10, 1}, {{{1, 1}, 1}, {{2, 1}, 2}, {{4, 1}, 2}, {{6, 1}, 4}, {{8, 1}, 5}});
  const auto res = solve_semionline(inst, Rational(9, 10));
  ASSERT_FALSE(res.phases.empty());
  const auto& ph = res.phases[0];
  EXPECT_EQ(ph.round_weights, (std::vector<Rational>{1, 2, 4, 8, 13}));
  EXPECT_EQ(ph.r, 3);
  EXPECT_EQ(ph.current_weight, Rational(8));
  ASSERT_GE(res.phases.size(), 2u);
  EXPECT_EQ(res.phases[1].j0, 9);
}

TEST(SemiOnline, ShortInstanceIsExact) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 30; ++it) {
    auto inst = los::test::random_instance(rng, 5, {4, 2}, 0.7, 3);
    EXPECT_EQ(solve_semionline(inst, Rational(1, 2)).solution.total_weight, solve_exact_narrow(inst).total_weight);
  }
}

TEST(SemiOnline, EmptyInstance) {
  EXPECT_EQ(solve_semionline(make_instance(3, {1, 1}, {}), Rational(1)).solution.total_weight, Rational(0));
}

TEST(SemiOnline, RatioAgainstOfflineDp) {
  std::mt19937_64 rng(808);
  for (int it = 0; it < 150; ++it) {
    const int k = 1 + static_cast<int>(rng() % 2), omega = 2 + static_cast<int>(rng() % 2);
    const int n = 5 + static_cast<int>(rng() % 36);
    auto inst = los::test::random_instance(rng, omega, {n, k}, (rng() % 2) ? 0.5 : 0.9, 1);
    const Rational offline = solve_exact_narrow(inst).total_weight;
    for (const Rational eps : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
      const auto res = solve_semionline(inst, eps);
      ASSERT_GE(res.solution.total_weight * (Rational(1) + eps), offline) << serialize_losn(inst);
      ASSERT_TRUE(verify(inst, res.solution).ok());
      const auto bound = static_cast<std::size_t>(max_lookahead(k, 2, eps, omega));
      for (const auto& ph : res.phases) {
        ASSERT_LE(ph.lookahead_used, bound);
        ASSERT_FALSE(ph.forced);
      }
    }
  }
}

TEST(SemiOnline, RoundWeightsGrowGeometrically) {
  std::mt19937_64 rng(91);
  for (int it = 0; it < 80; ++it) {
    auto inst = los::test::random_instance(rng, 3, {30, 2}, 0.8, 1);
    const Rational eps(1, 2);
    for (const auto& ph : solve_semionline(inst, eps).phases) {
      if (ph.round_weights.empty() || ph.round_weights[0].is_zero()) continue;
      Rational need = ph.round_weights[0];
      for (int r = 0; r <= ph.r; ++r) {
        ASSERT_GE(ph.round_weights[r], need);
        need *= Rational(1) + eps;
        if (r > 0) ASSERT_GE(ph.round_weights[r], ph.round_weights[r - 1]);
      }
      ASSERT_LE(ph.r, phase_round_bound(2, 2, eps));
    }
  }
}

TEST(SemiOnline, StreamingReaderMatchesInMemory) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 25; ++it) {
    auto inst = los::test::random_instance(rng, 3, {25, 2, 2}, 0.5, 4);
    const Rational eps(1, 2);
    const auto mem = solve_semionline(inst, eps);
    std::istringstream in(serialize_losn(inst));
    LosnColumnSource src(in);
    ColumnStream stream(src);
    SemiOnlineParams p;
    p.epsilon = eps;
    p.round_cap = round_cap_for(inst, eps, 0);
    p.debug_resolve = true;
    const auto streamed = solve_semionline(stream, p);
    EXPECT_EQ(streamed.solution.vertices, mem.solution.vertices);
    EXPECT_EQ(streamed.solution.total_weight, mem.solution.total_weight);
    ASSERT_EQ(streamed.phases.size(), mem.phases.size());
    for (std::size_t i = 0; i < mem.phases.size(); ++i) {
      EXPECT_EQ(phase_trace_line(streamed.phases[i]), phase_trace_line(mem.phases[i]));
    }
  }
}

TEST(SemiOnline, StreamingRejectsUnsortedInput) {
  std::istringstream in("losn v1\nd=2 omega=2 extents=4,1\nv 3 1 1\nv 1 1 1\n");
  LosnColumnSource src(in);
  ColumnStream stream(src);
  SemiOnlineParams p;
  p.round_cap = 5;
  EXPECT_THROW(solve_semionline(stream, p), ValidationError);
}

TEST(SemiOnline, RoundCapForcesAStop) {
  const auto inst = make_instance(2, {10, 1}, {{{1, 1}, 1}, {{2, 1}, 2}, {{4, 1}, 2}, {{6, 1}, 4}, {{8, 1}, 5}});
  ArrayColumnSource src(build_array(inst, 0));
  ColumnStream stream(src);
  SemiOnlineParams p;
  p.epsilon = Rational(9, 10);
  p.round_cap = 1;
  const auto res = solve_semionline(stream, p);
  ASSERT_FALSE(res.phases.empty());
  EXPECT_TRUE(res.phases[0].forced);
  EXPECT_EQ(res.phases[0].r, 1);
  EXPECT_TRUE(verify(inst, res.solution).ok());
}

TEST(SemiOnline, WeightedRoundCapCoversGrowth) {
  const auto inst = make_instance(2, {10, 1}, {{{1, 1}, 1}, {{3, 1}, 100}});
  EXPECT_GE(round_cap_for(inst, Rational(1), 0), static_cast<std::int64_t>(std::ceil(std::log2(101.0))));
  const auto res = solve_semionline(inst, Rational(1));
  for (const auto& ph : res.phases) EXPECT_FALSE(ph.forced);
}

TEST(SemiOnline, TraceLineShape) {
  PhaseState ph;
  ph.j0 = 4;
  ph.r = 2;
  ph.current_weight = Rational(5, 2);
  ph.lookahead_used = 9;
  EXPECT_EQ(phase_trace_line(ph), R"({"j0":4,"r_star":2,"weight":"5/2","lookahead_used":9})");
}

TEST(SemiOnline, FullAndEmptyExtremesTerminate) {
  SolverOptions axis0;
  axis0.long_axis = 0;
  for (int n : {1, 2, 7, 40}) {
    for (int omega : {2, 3}) {
      const auto full = solve_semionline(full_instance(omega, {n, 2}), Rational(1, 2), axis0);
      EXPECT_LE(full.phases.size(), static_cast<std::size_t>(n));
      const auto empty = solve_semionline(make_instance(omega, {n, 2}, {}), Rational(1, 2), axis0);
      EXPECT_EQ(empty.phases.size(), static_cast<std::size_t>(n));
    }
  }
}
