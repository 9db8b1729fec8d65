// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "equicohom/coeff_rings.hpp"
#include "equicohom/rings.hpp"

namespace eqc {

// ---- generic homomorphism application ---------------------------------

// Sends sum c*m to sum scalar(c) * prod images[i]^m[i].
template <class E, class V, class Mul, class Add, class Scalar>
E apply_hom(const Poly<V>& x, const std::vector<E>& images, Mul mul, Add add, Scalar scalar) {
  std::vector<std::vector<E>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const E& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(images[i]);
    while (static_cast<int>(p.size()) < k) p.push_back(mul(p.back(), images[i]));
    return p[k - 1];
  };
  E out{};
  for (const auto& [m, c] : x) {
    E t = scalar(c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (m[static_cast<int>(i)] < 0) throw std::domain_error("negative exponent in source");
      if (m[static_cast<int>(i)] > 0) t = mul(t, power(i, m[static_cast<int>(i)]));
    }
    out = add(out, t);
  }
  return out;
}

// ---- Laurent targets ----------------------------------------------------

namespace tg {
enum : int { z00 = 0, z01, z10, z11, x1, x2, unit };
}

// Polynomials in x1, x2 with Laurent zeta's and optionally a Laurent unit
// (iota or e) over a coefficient ring. With iota_reduce, iota^2 is rewritten
// as the zeta product.
template <class CR>
struct TargetAlgebra {
  using V = typename CR::value_type;
  using Elem = Poly<V>;
  CR ring;
  std::shared_ptr<const GeneratorSet> gens;
  bool iota_reduce = false;

  Elem normalize(const Elem& x) const {
    if (!iota_reduce) return x;
    Elem r;
    for (const auto& [m, c] : x) {
      Monomial n = m;
      Int k = n[tg::unit];
      Int q = floor_div(k, 2);
      n[tg::unit] = static_cast<std::int32_t>(k - 2 * q);
      for (int i = tg::z00; i <= tg::z11; ++i) n[i] += static_cast<std::int32_t>(q);
      poly_add_term(ring, r, n, c);
    }
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const { return normalize(poly_mul_raw(ring, a, b)); }
  Elem add(const Elem& a, const Elem& b) const { return poly_add(ring, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly_sub(ring, a, b); }
  Elem neg(const Elem& a) const { return poly_neg(ring, a); }
  Elem term(const V& c, const Monomial& m) const {
    Elem r;
    poly_add_term(ring, r, m, c);
    return normalize(r);
  }
  Elem one() const { return term(ring.one(), {}); }
  Elem var(int slot, int k = 1) const { return term(ring.one(), Monomial::var(slot, k)); }
  std::string str(const Elem& x) const { return poly_str(ring, *gens, x); }
};

using IntTarget = TargetAlgebra<IntRing>;
using HTarget = TargetAlgebra<HRing>;
using TupleH = std::array<Poly<HCoeff>, 4>;
using TupleZ = std::array<Poly<Int>, 4>;
using PhiElem = BT2Model<LaurentRing>::Elem;

const IntTarget& rho_target();  // Z[x1, x2, iota^+-1, zeta^+-1] / (prod zeta = iota^2)
const IntTarget& phi_target();  // Z[e^+-1][x1, x2, zeta^+-1]
const HTarget& eta_target();    // H[x1, x2, zeta^+-1]

// Component index c in {0,1,2,3} stands for 00, 01, 10, 11.
Poly<Int> rho(const BT2Elem& x);
Poly<Int> rho_base(const BT2Model<LaurentRing>::Elem& x);  // from the rho base change
Poly<HCoeff> eta(int c, const BT2Elem& x);
TupleH eta(const BT2Elem& x);
Poly<Int> phi_bar(int c, const PhiElem& x);
TupleZ phi_bar(const PhiElem& x);
TupleZ phi(const BT2Elem& x);
PhiElem to_phi_ring(const BT2Elem& x);
// Inverse of phi_bar.
PhiElem psi(const TupleZ& x);
PhiElem psi_component(int c, const Poly<Int>& x);

// ---- epsilon elements and duals -----------------------------------------

BT2Elem epsilon1();
BT2Elem epsilon2();
BT2Elem epsilon_oplus();
// Dual class of a c-generator (flat slot cw1, cxw1, cw2, cxw2, cT, cxT).
BT2Elem dual_generator(int slot);

// ---- pullbacks ------------------------------------------------------------

BT2Elem sstar(const BU2Poly& x);
BT2Elem delta_star(const BT2Elem& x);
BT2Elem chi1_star(const BT2Elem& x);
BT2Elem gamma_star(const BT2Elem& x);
BT1Elem t_star(const BT2Elem& x);
BT2Elem pi1_star(const BT1Elem& x);
BT2Elem pi2_star(const BT1Elem& x);
// delta, chi1, gamma by name.
BT2Elem pullback_bt2(const std::string& name, const BT2Elem& x);

// ---- BU(2) ------------------------------------------------------------------

struct UndecidableError : std::domain_error {
  explicit UndecidableError(const std::string& what) : std::domain_error(what) {}
};

BU2Poly bu2_add(const BU2Poly& a, const BU2Poly& b);
BU2Poly bu2_sub(const BU2Poly& a, const BU2Poly& b);
BU2Poly bu2_mul(const BU2Poly& a, const BU2Poly& b);
BU2Poly bu2_term(const HCoeff& c, const Monomial& m);
BU2Poly bu2_gen(int slot);
std::string bu2_str(const BU2Poly& x);
GradingBT2 bu2_grading(const BU2Poly& x);

struct BU2Element {
  BU2Poly poly;
  BT2Elem image;  // s* image
  static BU2Element of(const BU2Poly& p) { return {p, sstar(p)}; }
};
// Equality through s* images; only decided in even gradings.
bool bu2_equal(const BU2Element& a, const BU2Element& b);

// c^_{chi lambda} = -(1 - kappa)(1 - u[1] Z0 Z2 cL) cxL.
BU2Poly bu2_dual_chi_lambda();

// ---- pushforward ------------------------------------------------------------

// Module generators 1, z01 c^w1, z10 c^xw1, c^w1 c^xw1.
std::array<BT2Elem, 4> bu2_module_generators();
std::array<BU2Poly, 4> pushforward_values();

struct DecomposedOverBU2 {
  std::array<BU2Poly, 4> a;
};
BT2Elem expand(const DecomposedOverBU2& x);
BU2Poly pushforward(const DecomposedOverBU2& x);

// Nonequivariant division rule: writes p(xh1, xh2) as A + B*xh1 modulo
// xh1^2 = c1*xh1 - c2, xh2 = c1 - xh1, and returns B(c1, c2). Slots s1/s2
// hold xh1/xh2 on input and c1/c2 on output.
template <class CR>
Poly<typename CR::value_type> ne_pushforward(const CR& ring, const Poly<typename CR::value_type>& p,
                                             int s1, int s2) {
  using V = typename CR::value_type;
  constexpr int X = kMaxGens - 3, C1 = kMaxGens - 2, C2 = kMaxGens - 1;
  Poly<V> work;
  for (const auto& [m, c] : p) {
    Monomial rest = m;
    int a = rest[s1], b = rest[s2];
    if (a < 0 || b < 0) throw std::domain_error("negative power of a Chern root");
    rest[s1] = 0;
    rest[s2] = 0;
    // xh2^b = (c1 - xh1)^b
    Int binom = 1;
    for (int k = 0; k <= b; ++k) {
      Monomial n = rest;
      n[X] = a + k;
      n[C1] = b - k;
      Int sign = (k % 2 == 0) ? 1 : -1;
      poly_add_term(ring, work, n, ring.mul(ring.from_int(checked_mul(sign, binom)), c));
      binom = binom * (b - k) / (k + 1);
    }
  }
  while (true) {
    auto it = std::find_if(work.begin(), work.end(), [](const auto& t) { return t.first[X] >= 2; });
    if (it == work.end()) break;
    Monomial m = it->first;
    V c = it->second;
    work.erase(it);
    Monomial lin = m, cst = m;
    lin[X] -= 1;
    lin[C1] += 1;
    cst[X] -= 2;
    cst[C2] += 1;
    poly_add_term(ring, work, lin, c);
    poly_add_term(ring, work, cst, ring.neg(c));
  }
  Poly<V> out;
  for (const auto& [m, c] : work) {
    if (m[X] != 1) continue;
    Monomial n = m;
    n[X] = 0;
    n[s1] = n[C1];
    n[s2] = n[C2];
    n[C1] = 0;
    n[C2] = 0;
    poly_add_term(ring, out, n, c);
  }
  return out;
}

struct ComponentCheck {
  std::string generator;
  bool component0 = false;
  bool decomposition = false;
  bool component1 = false;
  bool component2 = false;
  std::vector<std::string> detail;
  bool pass() const { return component0 && decomposition && component1 && component2; }
};
// Verifies eta(s_!(g)) componentwise for the four module generators.
std::vector<ComponentCheck> check_component_pushforwards();

// ---- mod N ------------------------------------------------------------------

BT2Model<Mod2Ring>::Elem mod_n(const BT2Elem& x);
// Coefficientwise image without normalization.
BT2Model<Mod2Ring>::Elem mod_n_raw(const BT2Elem& x);

}  // namespace eqc
