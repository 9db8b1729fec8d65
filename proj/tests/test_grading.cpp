// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "equicohom/grading.hpp"

namespace eqc {
namespace {

GradingBT2 random_grading(std::mt19937& rng, int box = 6) {
  std::uniform_int_distribution<int> d(-box, box);
  return GradingBT2::raw(d(rng), d(rng), d(rng), d(rng), d(rng), d(rng));
}

TEST(Grading, W11IsEliminated) {
  EXPECT_EQ(GradingBT2::raw(0, 0, 0, 0, 0, 1), GradingBT2::raw(-2, 2, -1, -1, -1, 0));
  EXPECT_EQ(GradingBT2::omega(1, 1), GradingBT2::raw(-2, 2, -1, -1, -1, 0));
  GradingBT2 sum = GradingBT2::omega(0, 0) + GradingBT2::omega(0, 1) + GradingBT2::omega(1, 0) +
                   GradingBT2::omega(1, 1);
  EXPECT_EQ(sum, GradingBT2::ro2(-2, 2));
}

TEST(Grading, Bt1W1IsEliminated) {
  EXPECT_EQ(GradingBT1::raw(0, 0, 1, 1), GradingBT1::raw(-2, 2, 0, 0));
  EXPECT_EQ(GradingBT1::raw(1, 0, 0, 1).m0(), -1);
}

TEST(Grading, ParseAcceptsAnyOrderAndW11) {
  EXPECT_EQ(parse_grading("2 + 2*s + W00 + W01 + W11"), GradingBT2::raw(2, 2, 1, 1, 0, 1));
  EXPECT_EQ(parse_grading("W10 - 3*W01 + 4 - s"), GradingBT2::raw(4, -1, 0, -3, 1, 0));
  EXPECT_EQ(parse_grading("0"), GradingBT2{});
  EXPECT_THROW(parse_grading(""), std::invalid_argument);
  EXPECT_THROW(parse_grading("W02"), std::invalid_argument);
  EXPECT_THROW(parse_grading("1 2"), std::invalid_argument);
}

TEST(Grading, StrRoundTrips) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    GradingBT2 g = random_grading(rng);
    EXPECT_EQ(parse_grading(g.str()), g) << g.str();
  }
}

TEST(Grading, DegreeMapsAreAdditive) {
  std::mt19937 rng(12);
  for (int i = 0; i < 1000; ++i) {
    GradingBT2 g1 = random_grading(rng), g2 = random_grading(rng);
    EXPECT_EQ(rho_deg(g1 + g2), rho_deg(g1) + rho_deg(g2));
    auto p = phi_deg(g1 + g2), p1 = phi_deg(g1), p2 = phi_deg(g2);
    for (int c = 0; c < 4; ++c) EXPECT_EQ(p[c], p1[c] + p2[c]);
  }
}

TEST(Grading, DegreeMapsOnGenerators) {
  // Both vanish on the relation W00 + W01 + W10 + W11 = 2s - 2.
  EXPECT_EQ(rho_deg(GradingBT2::ro2(1, 0)), 1);
  EXPECT_EQ(rho_deg(GradingBT2::ro2(0, 1)), 1);
  EXPECT_EQ(rho_deg(GradingBT2::omega(1, 1)), 0);
  EXPECT_EQ(phi_deg(GradingBT2::omega(1, 1)), (std::array<Int, 4>{0, 0, 0, -2}));
  EXPECT_EQ(phi_deg(GradingBT2::omega(0, 1)), (std::array<Int, 4>{0, -2, 0, 0}));
  EXPECT_EQ(phi_deg(GradingBT2::ro2(0, 1)), (std::array<Int, 4>{0, 0, 0, 0}));
}

TEST(Grading, SroIsASubgroup) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    Int m00 = d(rng), m01 = d(rng), m10 = d(rng);
    Int m11 = m01 + m10 - m00;
    ASSERT_TRUE(is_sro_raw(m00, m01, m10, m11));
    GradingBT2 g = GradingBT2::raw(d(rng), d(rng), m00, m01, m10, m11);
    Int n00 = d(rng), n01 = d(rng), n10 = d(rng);
    GradingBT2 h = GradingBT2::raw(d(rng), d(rng), n00, n01, n10, n01 + n10 - n00);
    EXPECT_TRUE(is_sro(g));
    EXPECT_TRUE(is_sro(g + h));
    EXPECT_TRUE(is_sro(-g));
  }
  EXPECT_FALSE(is_sro(GradingBT2::omega(0, 0)));
  EXPECT_FALSE(is_sro(GradingBT2::omega(0, 0) + GradingBT2::omega(1, 1)));
  EXPECT_TRUE(is_sro(GradingBT2::omega(0, 0) + GradingBT2::omega(0, 1)));
  EXPECT_TRUE(is_sro(GradingBT2::omega(0, 1) - GradingBT2::omega(1, 0)));
}

TEST(Grading, RawAndCanonicalSroAgree) {
  for (int m00 = -3; m00 <= 3; ++m00)
    for (int m01 = -3; m01 <= 3; ++m01)
      for (int m10 = -3; m10 <= 3; ++m10)
        for (int m11 = -3; m11 <= 3; ++m11)
          EXPECT_EQ(is_sro_raw(m00, m01, m10, m11), is_sro(GradingBT2::raw(0, 0, m00, m01, m10, m11)));
}

TEST(Grading, EvenIsSymmetric) {
  std::mt19937 rng(14);
  for (int i = 0; i < 1000; ++i) {
    GradingBT2 g = random_grading(rng);
    EXPECT_EQ(is_even(g), is_even(-g));
  }
}

TEST(Grading, EmbeddingsAreInjectiveOnBox) {
  std::map<GradingBT2, GradingBT1> seen1, seen2;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int m0 = -5; m0 <= 5; ++m0) {
        GradingBT1 g = GradingBT1::raw(a, b, m0, 0);
        auto [it1, new1] = seen1.emplace(embed_bt1_pi1(g), g);
        EXPECT_TRUE(new1 || it1->second == g);
        auto [it2, new2] = seen2.emplace(embed_bt1_pi2(g), g);
        EXPECT_TRUE(new2 || it2->second == g);
      }
  EXPECT_EQ(seen1.size(), 11u * 11u * 11u);
  EXPECT_EQ(seen2.size(), 11u * 11u * 11u);

  std::map<GradingBT2, std::string> seen;
  std::set<std::string> classes;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int n0 = -5; n0 <= 5; ++n0)
        for (int n1 = -5; n1 <= 5; ++n1) {
          GradingBU2 g = GradingBU2::raw(a, b, n0, n1, 0);
          GradingBT2 e = embed_bu2(g);
          EXPECT_EQ(e.m01(), e.m10());
          classes.insert(g.str());
          auto [it, fresh] = seen.emplace(e, g.str());
          EXPECT_TRUE(fresh || it->second == g.str());
        }
  EXPECT_EQ(seen.size(), classes.size());
}

TEST(Grading, Bu2W2IsEliminated) {
  // s*(W0 + W1 + W2) = 2s - 2.
  EXPECT_EQ(GradingBU2::raw(0, 0, 0, 0, 1), GradingBU2::raw(-2, 2, -1, -1, 0));
  EXPECT_EQ(embed_bu2(GradingBU2::lambda()), GradingBT2::raw(2, 0, 0, 1, 1, 0));
}

TEST(Grading, OverflowIsReported) {
  Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(GradingBT2::ro2(big, 0) + GradingBT2::ro2(1, 0), OverflowError);
}

}  // namespace
}  // namespace eqc
