// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <vector>

#include "equicohom/expr.hpp"
#include "equicohom/rings.hpp"

namespace eqc {
namespace {

Monomial random_flat(std::mt19937& rng, int max_weight) {
  const auto& g = *flat_generators();
  std::uniform_int_distribution<int> slot(0, 9), exp(0, 2);
  Monomial m;
  for (int k = 0; k < 5; ++k) {
    Monomial n = m;
    n[slot(rng)] += exp(rng);
    if (g.weight(n) <= max_weight) m = n;
  }
  return m;
}

// Random homogeneous element: a combination of basis monomials of one cell
// (a random cell unless given).
BT2Elem random_element(std::mt19937& rng, int cell = -1) {
  static const std::vector<std::vector<Monomial>> cells = [] {
    std::vector<std::vector<Monomial>> out;
    for (const char* coset : {"0", "W01+W10", "W00", "W11"})
      for (const auto& c : basis_enumerate(parse_grading(coset), Window{-2, 4, -2, 6}))
        if (!c.monomials.empty()) out.push_back(c.monomials);
    return out;
  }();
  static const std::vector<HCoeff> coeffs = {HCoeff(1), HCoeff(-1), HCoeff(2), HCoeff(1) - HCoeff::kappa()};
  std::uniform_int_distribution<std::size_t> pick_cell(0, cells.size() - 1), pick(0, coeffs.size() - 1);
  const auto& ms = cells[cell >= 0 ? static_cast<std::size_t>(cell) % cells.size() : pick_cell(rng)];
  BT2Elem x;
  for (const auto& m : ms) poly_add_term(HRing{}, x, m, coeffs[pick(rng)]);
  return bt2().normalize(x);
}

TEST(Rings, TwoLevelAndFlatAgree) {
  std::mt19937 rng(31);
  const auto& two = *bt2_two_level();
  const auto& b1 = *bt1_system();
  std::uniform_int_distribution<int> e8(0, 7), e4(0, 3), exp(0, 2);
  int checked = 0;
  while (checked < 200) {
    // The e-part may contain z00*z01 or z10*z11, which the flat split would
    // have moved into the coefficient.
    Monomial em, cm;
    for (int k = 0; k < 4; ++k) em[e8(rng)] += exp(rng);
    for (int k = 0; k < 2; ++k) cm[e4(rng)] += exp(rng);
    Monomial flat = BT2::join(cm, em);
    if (flat_generators()->weight(flat) > 12) continue;
    TwoLevelSystem::Elem x;
    poly_add_term(two.ring(), x, em, b1.term(HCoeff(1), cm));
    BT2Elem flat_x;
    poly_add_term(HRing{}, flat_x, flat, HCoeff(1));
    EXPECT_EQ(bt2().flatten(two.reduce(x)), bt2().normalize(flat_x)) << flat_generators()->str(flat);
    ++checked;
  }
}

TEST(Rings, RelationsVanishInBothModels) {
  auto rels = bt2_relations();
  EXPECT_EQ(rels.size(), 8u);
  for (const auto& r : rels) {
    BT2Elem d = poly_sub(HRing{}, r.lhs, r.rhs);
    EXPECT_TRUE(bt2().normalize(d).empty()) << r.name;
    EXPECT_TRUE(bt2_two_level()->reduce(bt2().unflatten(d)).empty()) << r.name;
  }
}

TEST(Rings, MultiplicationIsCommutativeAndAssociative) {
  std::mt19937 rng(32);
  for (int i = 0; i < 60; ++i) {
    // b and c share a cell so that b + c is homogeneous.
    BT2Elem a = random_element(rng), b = random_element(rng, i), c = random_element(rng, i);
    EXPECT_EQ(bt2().mul(a, b), bt2().mul(b, a));
    EXPECT_EQ(bt2().mul(bt2().mul(a, b), c), bt2().mul(a, bt2().mul(b, c)));
    EXPECT_EQ(bt2().mul(a, bt2().add(b, c)), bt2().add(bt2().mul(a, b), bt2().mul(a, c)));
  }
}

TEST(Rings, NormalizationPreservesGrading) {
  std::mt19937 rng(33);
  for (int i = 0; i < 300; ++i) {
    Monomial m = random_flat(rng, 12);
    BT2Elem x = bt2().mono(m);
    for (const auto& [n, c] : x) EXPECT_TRUE(bt2().is_normal(n));
    auto g = bt2().grading(x);
    if (g) {
      EXPECT_EQ(*g, flat_generators()->grading(m)) << flat_generators()->str(m);
    }
  }
}

TEST(Rings, BasisMonomialsAreNormal) {
  for (const char* coset : {"0", "W01+W10", "W00", "W00+W01", "W01-W10"}) {
    GradingBT2 g = parse_grading(coset);
    Window w{-2, 8, -2, 12};
    auto cells = basis_enumerate(g, w);
    auto grid = basis_count_grid(g, w);
    std::size_t total = 0;
    for (const auto& c : cells) {
      EXPECT_EQ(grid.at({c.cell.a, c.cell.b}), static_cast<Int>(c.monomials.size()));
      for (const auto& m : c.monomials) {
        EXPECT_TRUE(bt2().is_normal(m)) << flat_generators()->str(m);
        EXPECT_EQ(flat_generators()->grading(m), g + GradingBT2::ro2(c.cell.a, c.cell.b));
        auto [cm, em] = BT2::split(m);
        for (const auto& r : bt2_two_level()->rules()) EXPECT_FALSE(r.lhs.divides(em)) << r.name;
        for (const auto& r : bt1_system()->rules()) EXPECT_FALSE(r.lhs.divides(cm)) << r.name;
      }
      total += c.monomials.size();
    }
    EXPECT_GT(total, 0u) << coset;
  }
}

TEST(Rings, ForbiddenMonomialsReduce) {
  for (const auto& r : bt2_two_level()->rules()) EXPECT_FALSE(bt2_two_level()->is_normal(r.lhs)) << r.name;
  for (const auto& r : bt1_system()->rules()) EXPECT_FALSE(bt1_system()->is_normal(r.lhs)) << r.name;
}

TEST(Rings, SecondCosetGrid) {
  // Hand count of normal monomials in coset W01+W10.
  std::map<std::pair<Int, Int>, Int> expect = {
      {{0, 0}, 1}, {{0, 2}, 1}, {{2, 0}, 1}, {{2, 2}, 3}, {{2, 4}, 2}, {{4, 2}, 2},
      {{4, 4}, 5}, {{4, 6}, 3}, {{6, 4}, 3}, {{6, 6}, 7}, {{6, 8}, 4}};
  auto grid = basis_count_grid(parse_grading("W01+W10"), Window{0, 6, 0, 10});
  std::map<std::pair<Int, Int>, Int> nonzero;
  for (const auto& [k, v] : grid)
    if (v != 0) nonzero[k] = v;
  EXPECT_EQ(nonzero, expect);
}

TEST(Rings, RankByRhoDegree) {
  // Basis monomials of rho-degree d correspond to x1^i x2^j with i + j = d/2.
  for (const char* coset : {"0", "W01+W10", "W00", "W01-W10"}) {
    GradingBT2 g = parse_grading(coset);
    for (Int d = 0; d <= 8; d += 2) {
      auto ms = basis_by_rho_degree(g, d);
      EXPECT_EQ(static_cast<Int>(ms.size()), d / 2 + 1) << coset << " at " << d;
      for (const auto& m : ms) {
        EXPECT_TRUE(bt2().is_normal(m));
        EXPECT_EQ(rho_deg(flat_generators()->grading(m)), d);
      }
    }
  }
}

TEST(Rings, Bu2EqualityIsAnEquivalence) {
  std::vector<BU2Element> xs;
  for (const char* s : {"Z0*Z2", "u[1]*Z0*Z2", "Z1^2", "cL*Z2", "Z0*Z1*cL", "Z1*Z0*cL", "2*Z0*Z2 - Z2*Z0"})
    xs.push_back(BU2Element::of(parse_bu2(s)));
  for (const auto& a : xs) {
    try {
      EXPECT_TRUE(bu2_equal(a, a));
    } catch (const std::domain_error&) {
    }
    for (const auto& b : xs) {
      bool ab = false, ba = false;
      try {
        ab = bu2_equal(a, b);
        ba = bu2_equal(b, a);
      } catch (const std::domain_error&) {
        continue;
      }
      EXPECT_EQ(ab, ba);
      EXPECT_EQ(ab, a.image == b.image);
    }
  }
  EXPECT_TRUE(bu2_equal(xs[0], xs[6]));
}

TEST(Rings, BaseChangedModelsAgreeWithCoefficientMaps) {
  std::mt19937 rng(34);
  for (int i = 0; i < 40; ++i) {
    BT2Elem a = random_element(rng), b = random_element(rng);
    auto rho_of = [](const BT2Elem& x) { return bt2_map_coeffs<LaurentRing, HRing>(bt2_rho(), x, h_rho); };
    EXPECT_EQ(rho_of(bt2().mul(a, b)), bt2_rho().mul(rho_of(a), rho_of(b)));
    auto phi_of = [](const BT2Elem& x) { return bt2_map_coeffs<LaurentRing, HRing>(bt2_phi(), x, h_phi); };
    EXPECT_EQ(phi_of(bt2().mul(a, b)), bt2_phi().mul(phi_of(a), phi_of(b)));
  }
}

}  // namespace
}  // namespace eqc
