// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <random>
#include <vector>

#include "equicohom/rings.hpp"

namespace eqc {
namespace {

Monomial random_monomial(std::mt19937& rng, int nvars, int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  Monomial m;
  for (int i = 0; i < nvars; ++i) m[i] = d(rng);
  return m;
}

TEST(Rewrite, Bt1IsConfluent) {
  auto rep = bt1_system()->check_confluence();
  EXPECT_EQ(rep.pairs.size(), 2u);
  for (const auto& p : rep.pairs) EXPECT_TRUE(p.joined) << p.rule_i << "," << p.rule_j;
}

TEST(Rewrite, TwoLevelIsConfluent) {
  auto rep = bt2_two_level()->check_confluence();
  EXPECT_FALSE(rep.pairs.empty());
  for (const auto& p : rep.pairs) EXPECT_TRUE(p.joined) << p.rule_i << "," << p.rule_j;
}

TEST(Rewrite, BrokenSystemIsNotConfluent) {
  auto rules = bt2_two_level_rules();
  const auto& b1 = *bt1_system();
  bool flipped = false;
  for (auto& r : rules)
    if (r.name == "R2") {
      for (auto& [m, c] : r.rhs) c = b1.neg(c);
      flipped = true;
    }
  ASSERT_TRUE(flipped);
  TwoLevelSystem broken(e_generators(), bt2_two_level()->ring(), rules);
  EXPECT_FALSE(broken.check_confluence().pass());
}

TEST(Rewrite, RulesAreMonicDecreasingAndGraded) {
  auto check = [](const auto& sys) {
    for (const auto& r : sys.rules()) {
      EXPECT_TRUE(r.lhs.nonnegative());
      EXPECT_FALSE(r.lhs.is_one());
      for (const auto& [m, c] : r.rhs) {
        EXPECT_TRUE(sys.gens().compare(m, r.lhs) < 0) << r.name;
        auto g = sys.ring().grading(c);
        if (g) {
          EXPECT_EQ(*g + sys.gens().grading(m), sys.gens().grading(r.lhs)) << r.name;
        }
      }
    }
  };
  check(*bt1_system());
  check(*bt2_two_level());
}

TEST(Rewrite, RuleWithIncreasingRhsIsRejected) {
  const auto& b1 = *bt1_system();
  std::vector<BT1System::Rule> rules = {
      {"bad", Monomial::var(bt1g::z0), b1.gen(bt1g::cw)}};
  EXPECT_THROW(BT1System(bt1_generators(), HRing{}, rules), std::invalid_argument);
}

TEST(Rewrite, OrderIsMultiplicative) {
  std::mt19937 rng(21);
  const auto& g = *flat_generators();
  for (int i = 0; i < 2000; ++i) {
    Monomial a = random_monomial(rng, 10, 2), b = random_monomial(rng, 10, 2), c = random_monomial(rng, 10, 2);
    EXPECT_TRUE(g.compare(a * c, b * c) == g.compare(a, b));
  }
}

TEST(Rewrite, OrderIsWeightFirst) {
  const auto& g = *bt1_generators();
  // cw has weight 2, z0*z1 weight 2, z0 weight 1.
  EXPECT_TRUE(g.compare(Monomial::var(bt1g::z0), Monomial::var(bt1g::cw)) < 0);
  EXPECT_EQ(g.weight(Monomial::var(bt1g::cw)), 2);
  EXPECT_EQ(g.weight(Monomial::var(bt1g::z0) * Monomial::var(bt1g::z1)), 2);
}

TEST(Rewrite, Bt1NormalMonomials) {
  const auto& s = *bt1_system();
  Monomial z0z1 = Monomial::var(bt1g::z0) * Monomial::var(bt1g::z1);
  Monomial z1cxw = Monomial::var(bt1g::z1) * Monomial::var(bt1g::cxw);
  Monomial z0sqcw = Monomial::var(bt1g::z0, 2) * Monomial::var(bt1g::cw);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d) {
          Monomial m;
          m[bt1g::z0] = a;
          m[bt1g::z1] = b;
          m[bt1g::cxw] = c;
          m[bt1g::cw] = d;
          bool forbidden = z0z1.divides(m) || z1cxw.divides(m) || z0sqcw.divides(m);
          EXPECT_EQ(s.is_normal(m), !forbidden) << s.gens().str(m);
        }
}

TEST(Rewrite, ReduceIsIdempotentAndGraded) {
  std::mt19937 rng(22);
  const auto& s = *bt1_system();
  for (int i = 0; i < 500; ++i) {
    Monomial m = random_monomial(rng, 4, 4);
    BT1Elem x = s.term(HCoeff(1), m);
    EXPECT_EQ(s.reduce(x), x);
    for (const auto& [n, c] : x) EXPECT_TRUE(s.is_normal(n));
    auto g = s.grading(x);
    if (g) {
      EXPECT_EQ(*g, s.gens().grading(m)) << s.gens().str(m);
    }
  }
  const auto& two = *bt2_two_level();
  for (int i = 0; i < 300; ++i) {
    Monomial m = random_monomial(rng, 8, 2);
    TwoLevelSystem::Elem raw;
    poly_add_term(two.ring(), raw, m, bt1_system()->constant(HCoeff(1)));
    std::size_t steps = 0;
    auto x = two.reduce(raw, &steps);
    EXPECT_LT(steps, TwoLevelSystem::kStepLimit);
    EXPECT_EQ(two.reduce(x), x);
    for (const auto& [n, c] : x) EXPECT_TRUE(two.is_normal(n));
  }
}

TEST(Rewrite, ReductionIsDeterministic) {
  std::mt19937 rng(23);
  const auto& s = *bt1_system();
  // Group random monomials by grading so that sums stay homogeneous.
  std::map<GradingBT2, std::vector<Monomial>> by_grading;
  for (int i = 0; i < 2000; ++i) {
    Monomial m = random_monomial(rng, 4, 3);
    by_grading[s.gens().grading(m)].push_back(m);
  }
  int checked = 0;
  for (const auto& [g, ms] : by_grading) {
    if (ms.size() < 2) continue;
    BT1Elem raw;
    for (std::size_t k = 0; k < ms.size() && k < 4; ++k) poly_add_term(HRing{}, raw, ms[k], HCoeff(static_cast<Int>(k) + 1));
    std::size_t s1 = 0, s2 = 0;
    EXPECT_EQ(s.reduce(raw, &s1), s.reduce(raw, &s2));
    EXPECT_EQ(s1, s2);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Rewrite, WorkerCountFollowsEnvironment) {
  setenv("EQUICOHOM_THREADS", "3", 1);
  EXPECT_EQ(worker_count(), 3u);
  setenv("EQUICOHOM_THREADS", "junk", 1);
  EXPECT_GE(worker_count(), 1u);
  unsetenv("EQUICOHOM_THREADS");
}

TEST(Rewrite, ParallelForVisitsEveryIndex) {
  setenv("EQUICOHOM_THREADS", "4", 1);
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
  unsetenv("EQUICOHOM_THREADS");
}

}  // namespace
}  // namespace eqc
