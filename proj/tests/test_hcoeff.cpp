// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <vector>

#include "equicohom/hcoeff.hpp"

namespace eqc {
namespace {

std::vector<HCoeff> atom_sample() {
  std::vector<HCoeff> out = {HCoeff(1), HCoeff(-2), HCoeff(3), HCoeff::kappa(), HCoeff::g()};
  for (Int a = 1; a <= 3; ++a) out.push_back(HCoeff::e(a));
  for (Int b = 1; b <= 3; ++b) out.push_back(HCoeff::xi(b));
  for (Int n = 1; n <= 3; ++n) out.push_back(HCoeff::u(n));
  for (Int n = 2; n <= 3; ++n) out.push_back(HCoeff::t(n));
  out.push_back(HCoeff(1) - HCoeff::kappa());
  out.push_back(HCoeff::e(2) + HCoeff::xi() * HCoeff::kappa());
  return out;
}

// Sum, or nullopt when the gradings differ.
std::optional<HCoeff> safe_add(const HCoeff& a, const HCoeff& b) {
  try {
    return a + b;
  } catch (const GradingMismatch&) {
    return std::nullopt;
  }
}

// Product, or nullopt when it leaves the validated fragment.
std::optional<HCoeff> safe_mul(const HCoeff& a, const HCoeff& b) {
  try {
    return a * b;
  } catch (const FragmentError&) {
    return std::nullopt;
  }
}

TEST(HCoeff, RuleTableIsHomomorphic) {
  HRuleCheck check = check_h_rules_homomorphic();
  EXPECT_GT(check.instances, 1000u);
  for (const auto& f : check.failures) ADD_FAILURE() << f;
}

TEST(HCoeff, RuleSystemIsConfluent) {
  HConfluenceReport rep = check_h_confluence();
  EXPECT_GT(rep.comparisons, 0u);
  for (const auto& f : rep.failures) ADD_FAILURE() << f;
}

TEST(HCoeff, MultiplicationIsCommutativeAndAssociative) {
  auto s = atom_sample();
  std::size_t checked = 0;
  for (const auto& a : s)
    for (const auto& b : s) {
      auto ab = safe_mul(a, b), ba = safe_mul(b, a);
      ASSERT_EQ(ab.has_value(), ba.has_value());
      if (ab) {
        EXPECT_EQ(*ab, *ba) << a.str() << " * " << b.str();
      }
      for (const auto& c : s) {
        auto l = ab ? safe_mul(*ab, c) : std::nullopt;
        auto bc = safe_mul(b, c);
        auto r = bc ? safe_mul(a, *bc) : std::nullopt;
        if (!l || !r) continue;
        EXPECT_EQ(*l, *r) << a.str() << ", " << b.str() << ", " << c.str();
        ++checked;
      }
    }
  EXPECT_GT(checked, 2000u);
}

TEST(HCoeff, DistributesOverAddition) {
  auto s = atom_sample();
  for (const auto& a : s)
    for (const auto& b : s)
      for (const auto& c : s) {
        auto bc = safe_add(b, c);
        if (!bc) continue;
        auto ab = safe_mul(a, b), ac = safe_mul(a, c), abc = safe_mul(a, *bc);
        if (!ab || !ac || !abc) continue;
        EXPECT_EQ(*abc, *ab + *ac);
      }
}

TEST(HCoeff, ReductionMapsAreMultiplicative) {
  auto s = atom_sample();
  for (const auto& a : s)
    for (const auto& b : s) {
      auto ab = safe_mul(a, b);
      if (!ab) continue;
      EXPECT_EQ(h_rho(*ab), h_rho(a) * h_rho(b)) << a.str() << " * " << b.str();
      EXPECT_EQ(h_phi(*ab), h_phi(a) * h_phi(b)) << a.str() << " * " << b.str();
      auto sum = safe_add(a, b);
      if (!sum) continue;
      EXPECT_EQ(h_rho(*sum), h_rho(a) + h_rho(b));
      EXPECT_EQ(h_phi(*sum), h_phi(a) + h_phi(b));
    }
}

TEST(HCoeff, GradingIsAdditive) {
  auto s = atom_sample();
  for (const auto& a : s)
    for (const auto& b : s) {
      if (!a.single_term() || !b.single_term()) continue;
      auto ab = safe_mul(a, b);
      if (!ab || ab->is_zero()) continue;
      EXPECT_EQ(*ab->grading(), *a.grading() + *b.grading()) << a.str() << " * " << b.str();
    }
}

TEST(HCoeff, UnitsSquareToOne) {
  HCoeff one(1);
  EXPECT_EQ((one - HCoeff::kappa()) * (one - HCoeff::kappa()), one);
}

TEST(HCoeff, ModN) {
  EXPECT_EQ(h_mod_n(HCoeff(1)), 1);
  EXPECT_EQ(h_mod_n(HCoeff(-3)), 1);
  EXPECT_EQ(h_mod_n(HCoeff(2)), 0);
  EXPECT_EQ(h_mod_n(HCoeff::kappa()), 0);
  EXPECT_EQ(h_mod_n(HCoeff(1) - HCoeff::kappa()), 1);
  EXPECT_EQ(h_mod_n(HCoeff::e(2)), 0);
}

TEST(HCoeff, IntegersEmbed) {
  EXPECT_EQ(HCoeff(2) + HCoeff(3), HCoeff(5));
  EXPECT_EQ(*HCoeff(7).as_integer(), 7);
  EXPECT_FALSE(HCoeff::kappa().as_integer().has_value());
  EXPECT_TRUE((HCoeff(4) - HCoeff(4)).is_zero());
}

TEST(HCoeff, FragmentBoundsAreErrors) {
  EXPECT_EQ(HCoeff::u(0), HCoeff::kappa());
  EXPECT_THROW(HCoeff::u(-1), FragmentError);
  EXPECT_THROW(HCoeff::t(1), FragmentError);
  EXPECT_THROW(HCoeff::e(-1), FragmentError);
}

TEST(HCoeff, AtomsRoundTrip) {
  for (const auto& at : h_atom_box()) {
    HCoeff x;
    try {
      x = HCoeff::from_atoms(at);
    } catch (const FragmentError&) {
      continue;
    }
    EXPECT_EQ(h_rho(x), h_rho_atoms(at)) << at.str();
    EXPECT_EQ(h_phi(x), h_phi_atoms(at)) << at.str();
  }
}

}  // namespace
}  // namespace eqc
