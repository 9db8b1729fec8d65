// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "equicohom/classes.hpp"
#include "equicohom/expr.hpp"

namespace eqc {
namespace {

// Sets every zeta and the unit to 1, keeping the x-part.
Poly<Int> units_to_one(const Poly<Int>& p) {
  Poly<Int> out;
  for (const auto& [m, c] : p) {
    Monomial n;
    n[tg::x1] = m[tg::x1];
    n[tg::x2] = m[tg::x2];
    poly_add_term(IntRing{}, out, n, c);
  }
  return out;
}

Poly<Int> linear(Int a, Int b) {
  Poly<Int> p;
  poly_add_term(IntRing{}, p, Monomial::var(tg::x1), a);
  poly_add_term(IntRing{}, p, Monomial::var(tg::x2), b);
  return p;
}

TEST(Classes, UnitCheckPasses) {
  UnitReport rep = unit_check(3);
  for (const auto& f : rep.table_failures) ADD_FAILURE() << f;
  EXPECT_EQ(rep.squares_to_one, 16);
  EXPECT_EQ(rep.units.size(), 32u);
  EXPECT_TRUE(rep.units_match_products);
}

TEST(Classes, UnitsFormAGroup) {
  UnitReport rep = unit_check(3);
  std::vector<Unit5> units = rep.units;
  std::sort(units.begin(), units.end());
  for (const auto& a : units)
    for (const auto& b : units) {
      Unit5 p = to_unit5(bt2().mul(from_unit5(a), from_unit5(b)));
      EXPECT_TRUE(std::binary_search(units.begin(), units.end(), p));
    }
}

TEST(Classes, Unit5RoundTrips) {
  for (const auto& u : unit_check(3).units) EXPECT_EQ(to_unit5(from_unit5(u)), u);
  EXPECT_THROW(to_unit5(bt2().gen("z00")), std::exception);
}

TEST(Classes, QPullbacks) {
  EXPECT_EQ(q1(), pi1_star(q_bt1()));
  EXPECT_EQ(q2(), pi2_star(q_bt1()));
  EXPECT_EQ(q1(), euler_omn(2, 0, false));
  EXPECT_EQ(q2(), euler_omn(0, 2, false));
}

TEST(Classes, EulerTensorRecursion) {
  for (Int m = -2; m <= 2; ++m)
    for (Int n = -2; n <= 2; ++n)
      for (bool tw : {false, true}) {
        BT2Elem e = euler_omn(m, n, tw);
        for (Int k = -1; k <= 1; ++k)
          for (Int l = -1; l <= 1; ++l)
            EXPECT_EQ(euler_omn(m + 2 * k, n + 2 * l, tw),
                      euler_tensor_fixed(e, euler_zeta1(m, n, tw), euler_omn(2 * k, 2 * l, false)))
                << m << "," << n << (tw ? " twisted" : "") << " + " << 2 * k << "," << 2 * l;
      }
}

TEST(Classes, EulerRestrictsToChernClass) {
  // Nonequivariantly O(m,n) has first Chern class m*x1 + n*x2 up to sign.
  for (Int m = -3; m <= 3; ++m)
    for (Int n = -3; n <= 3; ++n)
      for (bool tw : {false, true}) {
        Poly<Int> r = units_to_one(rho(euler_omn(m, n, tw)));
        EXPECT_EQ(r, linear(-m, -n)) << m << "," << n << (tw ? " twisted" : "");
      }
  EXPECT_TRUE(euler_omn(0, 0, false).empty());
}

TEST(Classes, WanerClassRestrictsToChernClasses) {
  // rho(c(w1 + ... + wn)) = prod zeta_i * prod (1 + L_i t), L_i the Chern root.
  std::map<std::string, Poly<Int>> root = {{"1", {}},
                                           {"w1", linear(1, 0)},
                                           {"xw1", linear(1, 0)},
                                           {"w2", linear(0, 1)},
                                           {"xw2", linear(0, 1)},
                                           {"T", linear(1, 1)},
                                           {"xT", linear(1, 1)}};
  const auto& T = rho_target();
  std::vector<std::vector<std::string>> cases = {
      {"w1"}, {"w1", "w2"}, {"T", "xT"}, {"w1", "xw1", "w2"}, {"1", "T", "xw2"}, {"w1", "w2", "T", "xT"}};
  for (const auto& names : cases) {
    std::vector<LineBundle> lbs;
    for (const auto& n : names) lbs.push_back(line_bundle(n));
    WanerClass w = waner_total(lbs);
    ASSERT_EQ(w.rank(), static_cast<int>(names.size()));
    // sigma[k] = k-th elementary symmetric polynomial of the roots.
    std::vector<Poly<Int>> sigma = {T.one()};
    Poly<Int> zeta = T.one();
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::vector<Poly<Int>> next(sigma.size() + 1);
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        next[k] = T.add(next[k], sigma[k]);
        next[k + 1] = T.add(next[k + 1], T.mul(sigma[k], root[names[i]]));
      }
      sigma = next;
      zeta = T.mul(zeta, rho(lbs[i].zeta));
    }
    for (int k = 0; k <= w.rank(); ++k)
      EXPECT_EQ(rho(w.coeffs[k]), T.mul(zeta, sigma[k])) << "t^" << k << " of " << names.size() << " bundles";
  }
}

TEST(Classes, WanerClassIsMultiplicative) {
  auto a = std::vector<LineBundle>{line_bundle("w1"), line_bundle("xT")};
  auto b = std::vector<LineBundle>{line_bundle("w2")};
  auto ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  EXPECT_EQ(waner_total(ab), waner_product(waner_total(a), waner_total(b)));
  EXPECT_THROW(waner_total({}), std::invalid_argument);
  EXPECT_THROW(line_bundle("w3"), std::invalid_argument);
}

TEST(Classes, DualClassesByName) {
  EXPECT_EQ(dual_class("cw1"), dual_generator(fg::cw1));
  EXPECT_EQ(dual_class("cxT"), dual_generator(fg::cxT));
  // Every dual class is nonzero.
  for (const char* g : {"cw1", "cxw1", "cw2", "cxw2", "cT", "cxT"}) {
    int slot = *flat_generators()->index(g);
    BT2Elem d = dual_generator(slot);
    EXPECT_FALSE(d.empty()) << g;
  }
}

TEST(Classes, BareissDeterminant) {
  EXPECT_EQ(bareiss_det({{2}}), 2);
  EXPECT_EQ(bareiss_det({{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(bareiss_det({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(bareiss_det({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}), 0);
  EXPECT_EQ(bareiss_det({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
  EXPECT_EQ(bareiss_det({{6, 1, 1}, {4, -2, 5}, {2, 8, 7}}), -306);
}

}  // namespace
}  // namespace eqc
