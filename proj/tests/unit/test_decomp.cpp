#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "los/decomp.hpp"
#include "los/errors.hpp"
#include "los/narrow_dp.hpp"
#include "los/oracle.hpp"
#include "test_support.hpp"

using namespace los;
using los::test::full_instance;
using los::test::make_instance;

TEST(StripIndex, Examples) {
  const std::vector<int> cut1 = {1};
  auto s = strip_of(Coords{5, 4}, 3, cut1);
  EXPECT_EQ(s.index, (std::vector<int>{1}));
  EXPECT_EQ(s.parity, 1);
  s = strip_of(Coords{5, 3}, 3, cut1);
  EXPECT_EQ(s.index, (std::vector<int>{0}));
  EXPECT_EQ(s.parity, 0);
  const std::vector<int> cut2 = {1, 2};
  s = strip_of(Coords{7, 1, 3}, 2, cut2);
  EXPECT_EQ(s.index, (std::vector<int>{0, 1}));
  EXPECT_EQ(s.parity, 1);
  EXPECT_TRUE(s.parity_consistent());
}

TEST(ParityCut, Examples) {
  const auto inst = full_instance(3, {5, 2});
  auto cut = parity_cut(inst, 2, 0);
  EXPECT_EQ(cut.even.size(), inst.size());
  EXPECT_TRUE(cut.odd.empty());

  const auto rows = full_instance(2, {2, 4});
  cut = parity_cut(rows, 1, 0);
  for (const auto& v : cut.even.vertices()) EXPECT_EQ(v.coords[1] % 2, 1);  // rows 1, 3
  for (const auto& v : cut.odd.vertices()) EXPECT_EQ(v.coords[1] % 2, 0);
}

TEST(ParityCut, PartitionsAndSameParityStripsAreIndependent) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 60; ++it) {
    const int omega = 2 + static_cast<int>(rng() % 3);
    const auto ext = rng() % 2 ? std::vector<int>{10, 9} : std::vector<int>{6, 5, 5};
    const auto inst = los::test::random_instance(rng, omega, ext, 0.5, 2);
    const int k = omega - 1;
    const auto cut = parity_cut(inst, k, 0);
    EXPECT_EQ(cut.odd.size() + cut.even.size(), inst.size());
    std::set<Coords> seen;
    for (const auto& v : cut.odd.vertices()) seen.insert(v.coords);
    for (const auto& v : cut.even.vertices()) EXPECT_TRUE(seen.insert(v.coords).second);
    const auto cuts = cut_axes_for(inst.d(), 0);
    for (const LosInstance* side : {&cut.odd, &cut.even}) {
      const auto& vs = side->vertices();
      for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          if (strip_of(vs[a].coords, k, cuts) == strip_of(vs[b].coords, k, cuts)) continue;
          ASSERT_FALSE(are_adjacent(vs[a].coords, vs[b].coords, omega));
        }
      }
    }
  }
}

TEST(Blocks, ExampleLayout) {
  std::vector<Range> blocks, boundary;
  block_ranges(12, 2, 1, 2, blocks, boundary);
  EXPECT_EQ(blocks, (std::vector<Range>{{1, 2}, {5, 8}, {11, 12}}));
  EXPECT_EQ(boundary, (std::vector<Range>{{3, 4}, {9, 10}}));
  block_ranges(12, 2, 0, 2, blocks, boundary);
  EXPECT_EQ(boundary.front(), (Range{1, 2}));
  EXPECT_EQ(blocks.front(), (Range{3, 6}));
  EXPECT_THROW(block_ranges(12, 2, 3, 2, blocks, boundary), ContractViolation);
}

TEST(Blocks, PartitionAndSeparatorWidths) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 40; ++it) {
    const int h = 1 + static_cast<int>(rng() % 4), k = 1 + static_cast<int>(rng() % 3);
    const int shift = static_cast<int>(rng() % (h + 1));
    const auto inst = los::test::random_instance(rng, k + 1, {4, 30}, 0.5, 1);
    const auto bd = make_blocks(inst, h, shift, 1, k);
    std::size_t total = 0;
    for (const auto& b : bd.block_vertices) total += b.size();
    for (const auto& b : bd.boundary_vertices) total += b.size();
    EXPECT_EQ(total, inst.size());
    for (std::size_t i = 0; i + 1 < bd.boundary.size(); ++i) EXPECT_EQ(bd.boundary[i].size(), k);
    for (const auto& b : bd.blocks) EXPECT_LE(b.size(), std::max(h, shift) * k);
    // between consecutive blocks lies exactly one separator
    for (std::size_t i = 0; i + 1 < bd.blocks.size(); ++i) EXPECT_EQ(bd.blocks[i + 1].lo - bd.blocks[i].hi - 1, k);
  }
}

TEST(Blocks, EveryStripIsBoundaryForExactlyOneShift) {
  for (int extent = 1; extent <= 60; ++extent) {
    for (int k = 1; k <= 3; ++k) {
      for (int h = 1; h <= 4; ++h) {
        std::vector<int> hits(static_cast<std::size_t>(extent) + 1, 0);
        for (int shift = 0; shift <= h; ++shift) {
          std::vector<Range> blocks, boundary;
          block_ranges(extent, h, shift, k, blocks, boundary);
          std::vector<int> covered(static_cast<std::size_t>(extent) + 1, 0);
          for (const auto& r : blocks) for (int c = r.lo; c <= r.hi; ++c) ++covered[c];
          for (const auto& r : boundary) for (int c = r.lo; c <= r.hi; ++c) { ++covered[c]; ++hits[c]; }
          for (int c = 1; c <= extent; ++c) ASSERT_EQ(covered[c], 1);
        }
        // coordinate c lies in strip ceil(c/k); each strip is boundary once
        for (int c = 1; c <= extent; ++c) ASSERT_EQ(hits[c], 1) << extent << " " << k << " " << h << " " << c;
      }
    }
  }
}

TEST(Strip2, SingleStripIsExact) {
  const auto inst = full_instance(4, {9, 3});
  const auto sol = solve_strip2(inst);
  EXPECT_EQ(sol.total_weight, solve_exact_narrow(inst).total_weight);
}

TEST(Strip2, EmptyInstance) {
  EXPECT_EQ(solve_strip2(make_instance(3, {5, 5}, {})).total_weight, Rational(0));
}

TEST(Strip2, HalfOfOptimumOnSmallInstances) {
  std::mt19937_64 rng(55);
  for (int it = 0; it < 200; ++it) {
    const int omega = 2 + static_cast<int>(rng() % 3);
    const auto ext = rng() % 3 == 0 ? std::vector<int>{4, 3, 3} : std::vector<int>{6, 4};
    auto inst = los::test::random_instance(rng, omega, ext, 0.6, (rng() % 2) ? 1 : 5, 22);
    const auto sol = solve_strip2(inst);
    const Rational opt = brute_mis(inst).total_weight;
    ASSERT_GE(sol.total_weight * Rational(2), opt);
    ASSERT_LE(sol.total_weight, opt);
    ASSERT_TRUE(verify(inst, sol).ok());
  }
}

TEST(Strip2, FullTwoRowGrid) {
  const auto inst = full_instance(3, {6, 4});
  const auto sol = solve_strip2(inst);
  EXPECT_GE(sol.total_weight * Rational(2), brute_mis(inst).total_weight);
  EXPECT_TRUE(verify(inst, sol).ok());
}

TEST(Strip2, ThreadCountDoesNotChangeOutput) {
  std::mt19937_64 rng(9);
  // many one-row strips; blocks stay at most 3x3 rows
  const auto inst = los::test::random_instance(rng, 2, {40, 6, 5}, 0.5, 5, 1000);
  SolverOptions one, four;
  four.threads = 4;
  EXPECT_EQ(solve_strip2(inst, one), solve_strip2(inst, four));
  EXPECT_EQ(solve_ptas(inst, Rational(1), one), solve_ptas(inst, Rational(1), four));
}

TEST(Ptas, BlockHeight) {
  EXPECT_EQ(ptas_h(Rational(1), 2), 1);
  EXPECT_EQ(ptas_h(Rational(1, 2), 2), 2);
  EXPECT_EQ(ptas_h(Rational(1, 4), 2), 4);
  EXPECT_EQ(ptas_h(Rational(3, 10), 2), 4);
  // d = 3, 1 + eps = 1.21: eps' = 0.1, h = 10
  EXPECT_EQ(ptas_h(Rational(21, 100), 3), 10);
  EXPECT_NEAR(epsilon_prime(0.21, 3), 0.1, 1e-12);
  // d = 3, eps = 1: eps' = sqrt(2) - 1 = 0.414..., h = 3
  EXPECT_EQ(ptas_h(Rational(1), 3), 3);
  for (int d = 2; d <= 5; ++d) {
    for (int q = 1; q <= 12; ++q) {
      const Rational eps(1, q);
      const int h = ptas_h(eps, d);
      const double ep = epsilon_prime(eps.to_double(), d);
      EXPECT_EQ(h, static_cast<int>(std::ceil(1.0 / ep - 1e-9))) << d << " " << q;
    }
  }
  EXPECT_THROW(ptas_h(Rational(0), 2), ValidationError);
}

TEST(Ptas, InsideOneBlockIsExact) {
  const auto inst = full_instance(3, {10, 2});
  for (const Rational eps : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
    EXPECT_EQ(solve_ptas(inst, eps).total_weight, solve_exact_narrow(inst).total_weight);
  }
}

TEST(Ptas, RatioOnDenseGrids) {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 30; ++it) {
    auto inst = los::test::random_instance(rng, 3, {12, 3}, 0.6, 1, 24);
    const Rational opt = brute_mis(inst).total_weight;
    const auto s1 = solve_ptas(inst, Rational(1));
    const auto s4 = solve_ptas(inst, Rational(1, 4));
    EXPECT_GE(s1.total_weight * Rational(2), opt);
    EXPECT_GE(s4.total_weight * Rational(5, 4), opt);
    EXPECT_TRUE(verify(inst, s1).ok());
    EXPECT_TRUE(verify(inst, s4).ok());
  }
}

TEST(Ptas, RatioAcrossEpsilonAndDimension) {
  std::mt19937_64 rng(202);
  for (int it = 0; it < 120; ++it) {
    const int omega = 2 + static_cast<int>(rng() % 2);
    const bool three = rng() % 3 == 0;
    const auto ext = three ? std::vector<int>{4, 4, 3} : std::vector<int>{6, 6};
    auto inst = los::test::random_instance(rng, omega, ext, 0.5, (rng() % 2) ? 1 : 4, 22);
    const Rational opt = brute_mis(inst).total_weight;
    for (const Rational eps : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
      const auto sol = solve_ptas(inst, eps);
      ASSERT_GE(sol.total_weight * (Rational(1) + eps), opt);
      ASSERT_TRUE(verify(inst, sol).ok());
    }
  }
}

TEST(Ptas, MetaFields) {
  const auto inst = full_instance(3, {12, 6});
  const auto sol = solve_ptas(inst, Rational(1, 2));
  ASSERT_NE(sol.find_meta("h"), nullptr);
  EXPECT_EQ(std::get<std::int64_t>(*sol.find_meta("h")), 2);
  ASSERT_NE(sol.find_meta("shift"), nullptr);
  const auto shift = std::get<std::int64_t>(*sol.find_meta("shift"));
  EXPECT_GE(shift, 0);
  EXPECT_LE(shift, 2);
  ASSERT_NE(sol.find_meta("blocks"), nullptr);
  ASSERT_NE(sol.find_meta("block_weights"), nullptr);
}

TEST(Ptas, BaseCaseBudgetIsReported) {
  SolverOptions opts;
  opts.window_budget = 50;
  EXPECT_THROW(solve_ptas(full_instance(4, {8, 8}), Rational(1, 4), opts), CapacityError);
}
