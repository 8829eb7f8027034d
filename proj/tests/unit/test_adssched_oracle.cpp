#include <gtest/gtest.h>

#include <random>

#include "los/adssched.hpp"
#include "los/errors.hpp"
#include "los/narrow_dp.hpp"
#include "los/oracle.hpp"
#include "test_support.hpp"

using namespace los;
using los::test::full_instance;
using los::test::make_instance;

namespace {

AdsInstance all_available(int clients, int times, int omega, int cap) {
  AdsInstance ads(clients, times, omega, cap);
  for (int c = 1; c <= clients; ++c) {
    for (int t = 1; t <= times; ++t) ads.set_available(c, t, true);
  }
  return ads;
}

}  // namespace

TEST(AdsSched, TwoClientsFourTimes) {
  const auto ads = all_available(2, 4, 2, 1);
  const auto sol = solve_adssched(ads);
  EXPECT_EQ(sol.total_weight, Rational(4));
  EXPECT_EQ(brute_adssched(ads).total_weight, Rational(4));
  EXPECT_TRUE(verify_ads(ads, sol).ok());
}

TEST(AdsSched, SlackCapacitySingleTime) {
  EXPECT_THROW(AdsInstance(3, 1, 2, 0), ValidationError);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(solve_adssched(all_available(k, 1, 2, k)).total_weight, Rational(k));
    EXPECT_EQ(solve_adssched(all_available(k, 1, 2, k + 3)).total_weight, Rational(k));
  }
}

TEST(AdsSched, OneClientSpacing) {
  for (int n = 1; n <= 12; ++n) {
    for (int omega = 2; omega <= 5; ++omega) {
      EXPECT_EQ(solve_adssched(all_available(1, n, omega, 1)).total_weight, Rational((n + omega - 1) / omega))
          << n << " " << omega;
    }
  }
}

TEST(AdsSched, MatchesBruteForceOnRandomMatrices) {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 150; ++it) {
    const int clients = 1 + static_cast<int>(rng() % 3), times = 1 + static_cast<int>(rng() % 6);
    AdsInstance ads(clients, times, 2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3));
    for (int c = 1; c <= clients; ++c) {
      for (int t = 1; t <= times; ++t) {
        ads.set_available(c, t, rng() % 3 != 0);
        if (rng() % 4 == 0) ads.set_weight(c, t, Rational(1 + static_cast<int>(rng() % 4)));
      }
    }
    const auto sol = solve_adssched(ads);
    ASSERT_EQ(sol.total_weight, brute_adssched(ads).total_weight) << serialize_ads(ads);
    ASSERT_TRUE(verify_ads(ads, sol).ok());
  }
}

TEST(AdsSched, TextFormatRoundTrip) {
  auto ads = all_available(2, 5, 3, 1);
  ads.set_available(2, 4, false);
  ads.set_weight(1, 2, Rational(5, 2));
  const std::string text = serialize_ads(ads);
  EXPECT_EQ(text, "ads v1\nclients=2 times=5 omega=3 l=1\na 11111\na 11101\nw 1 2 5/2\n");
  EXPECT_EQ(serialize_ads(parse_ads(text)), text);
  EXPECT_THROW(parse_ads("ads v1\nclients=2 times=3 omega=2 l=1\na 111\n"), ValidationError);
  EXPECT_THROW(parse_ads("ads v1\nclients=1 times=3 omega=2 l=1\na 1x1\n"), ValidationError);
  EXPECT_THROW(parse_ads("ads v1\nclients=1 times=3 omega=2 l=0\na 111\n"), ValidationError);
}

TEST(AdsSched, VerifierFlagsBrokenSchedules) {
  auto ads = all_available(2, 4, 2, 1);
  ads.set_available(2, 1, false);
  Solution bad;
  bad.vertices = {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {1, 3}};
  bad.total_weight = Rational(5);
  const auto rep = verify_ads(ads, bad);
  EXPECT_FALSE(rep.independent);
  // gap on client 1, capacity at times 1 and 3, availability of (2,1)
  EXPECT_GE(rep.violations.size(), 4u);
}

TEST(Oracle, BruteMisSmallCases) {
  EXPECT_EQ(brute_mis(make_instance(2, {3, 1}, {})).total_weight, Rational(0));
  const auto two = make_instance(3, {3, 1}, {{{1, 1}, 1}, {{2, 1}, 3}});
  const auto sol = brute_mis(two);
  EXPECT_EQ(sol.total_weight, Rational(3));
  EXPECT_EQ(sol.vertices, (std::vector<Coords>{{2, 1}}));
}

TEST(Oracle, BruteMisCap) {
  EXPECT_THROW(brute_mis(full_instance(2, {25, 1})), CapacityError);
  EXPECT_NO_THROW(brute_mis(full_instance(2, {24, 1})));
  EXPECT_THROW(brute_mis_powerset(full_instance(2, {21, 1})), CapacityError);
  EXPECT_THROW(brute_adssched(all_available(3, 7, 2, 1)), CapacityError);
}

TEST(Oracle, BranchAndBoundAgreesWithPowerSet) {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 200; ++it) {
    const int omega = 2 + static_cast<int>(rng() % 3);
    const auto ext = rng() % 2 ? std::vector<int>{7, 3} : std::vector<int>{4, 3, 2};
    auto inst = los::test::random_instance(rng, omega, ext, 0.6, (rng() % 2) ? 1 : 4, 20);
    const auto a = brute_mis(inst), b = brute_mis_powerset(inst);
    ASSERT_EQ(a.total_weight, b.total_weight);
    ASSERT_EQ(a.vertices, b.vertices);  // both report the lexicographically smallest optimum
    ASSERT_EQ(a.total_weight, los::test::reference_mis_weight(inst));
  }
}

TEST(Oracle, BruteWindowExamples) {
  EXPECT_EQ(brute_windows(RowSpace::box({1}), 3).size(), 4u);
  EXPECT_EQ(brute_windows(RowSpace::box({2}), 2).size(), 7u);
  EXPECT_EQ(brute_windows(RowSpace::from_rows({{1, 1}, {2, 2}}), 3).size(), 16u);
  EXPECT_THROW(brute_windows(RowSpace::box({5}), 5), CapacityError);
}

TEST(Oracle, VerifyReports) {
  const auto inst = full_instance(3, {6, 2});
  const auto good = solve_exact_narrow(inst);
  const auto rep = verify(inst, good);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.violations.empty());

  Solution adjacent = good;
  adjacent.vertices = {{1, 1}, {2, 1}};
  adjacent.total_weight = Rational(2);
  const auto r2 = verify(inst, adjacent);
  EXPECT_FALSE(r2.independent);
  ASSERT_EQ(r2.violations.size(), 1u);
  EXPECT_NE(r2.violations[0].find("(1,1)"), std::string::npos);
  EXPECT_NE(r2.violations[0].find("(2,1)"), std::string::npos);

  Solution tampered = good;
  tampered.total_weight += Rational(1);
  const auto r3 = verify(inst, tampered);
  EXPECT_TRUE(r3.independent);
  EXPECT_FALSE(r3.weight_matches);
  EXPECT_EQ(r3.weight_recomputed, good.total_weight);

  Solution unknown;
  unknown.vertices = {{9, 9}, {1, 1}, {1, 1}};
  const auto r4 = verify(inst, unknown);
  EXPECT_FALSE(r4.independent);
  EXPECT_EQ(r4.violations.size(), 2u);
}
