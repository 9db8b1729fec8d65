// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "equicohom/maps.hpp"

namespace eqc {

struct EpsilonElements {
  BT2Elem eps1, eps2, eps_oplus;
  static EpsilonElements make() { return {epsilon1(), epsilon2(), epsilon_oplus()}; }
};

// Grading-0 part of H(BT^2) in the basis {1, g, eps1, eps2, eps_oplus}.
using Unit5 = std::array<Int, 5>;

struct UnitReport {
  std::vector<std::string> table_failures;  // multiplication table entries that do not hold
  int squares_to_one = 0;                   // of the 16 products of (1-kappa), (1-eps*)
  std::vector<Unit5> units;                 // brute-force solutions in [-3,3]^5
  bool units_match_products = false;        // solutions are exactly the 32 signed products
  bool pass() const {
    return table_failures.empty() && squares_to_one == 16 && units.size() == 32 && units_match_products;
  }
};

// Integer determinant by fraction-free elimination.
Int bareiss_det(std::vector<std::vector<Int>> a);

BT2Elem from_unit5(const Unit5& u);
// Coordinates of a grading-0 element; throws if it is outside the span.
Unit5 to_unit5(const BT2Elem& x);
UnitReport unit_check(Int box = 3);

// Dual class by generator name (cw1, cxw1, cw2, cxw2, cT, cxT).
BT2Elem dual_class(const std::string& name);

// Euler class of O(2) over BT^1, and its pullbacks.
BT1Elem q_bt1();
BT2Elem q1();
BT2Elem q2();

// Closed formulas for e(O(m,n)) and e(chi O(m,n)).
BT2Elem euler_omn(Int m, Int n, bool twisted);
// zeta_1 of the classifying map of O(m,n) (or chi O(m,n)).
BT2Elem euler_zeta1(Int m, Int n, bool twisted);
// e(omega (x) mu) = e(omega) + zeta_1 e(mu) for mu with fixed points.
BT2Elem euler_tensor_fixed(const BT2Elem& e_omega, const BT2Elem& zeta1, const BT2Elem& e_mu);

// Line bundle data for the total Waner class: (zeta^(omega-2), c_omega).
struct LineBundle {
  std::string name;
  BT2Elem zeta;
  BT2Elem euler;
};
// Named line bundles: 1, w1, xw1, w2, xw2, T, xT.
LineBundle line_bundle(const std::string& name);
std::vector<std::string> line_bundle_names();

// Coefficients by power of t.
struct WanerClass {
  std::vector<BT2Elem> coeffs;
  int rank() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const WanerClass& o) const;
  std::string str() const;
};

WanerClass waner_total(const std::vector<LineBundle>& bundles);
WanerClass waner_product(const WanerClass& a, const WanerClass& b);

}  // namespace eqc
