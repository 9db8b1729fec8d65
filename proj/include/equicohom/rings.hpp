// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "equicohom/coeff_rings.hpp"
#include "equicohom/grading.hpp"
#include "equicohom/hcoeff.hpp"
#include "equicohom/rewrite.hpp"

namespace eqc {

// Generator slots.
namespace bt1g {
enum : int { z0 = 0, z1 = 1, cxw = 2, cw = 3 };
}
namespace eg {
enum : int { z00 = 0, z01, z10, z11, cxw2, cw2, cxT, cT };
}
namespace fg {
enum : int { z00 = 0, z01, z10, z11, cxw1, cw1, cxw2, cw2, cxT, cT };
}
namespace bu2g {
enum : int { Z0 = 0, Z1, Z2, cL, cxL, cW, cxW };
}

std::shared_ptr<const GeneratorSet> bt1_generators();
std::shared_ptr<const GeneratorSet> e_generators();
std::shared_ptr<const GeneratorSet> flat_generators();
std::shared_ptr<const GeneratorSet> bu2_generators();

using BT1System = RewriteSystem<HRing>;
using BT1Elem = BT1System::Elem;
using TwoLevelSystem = RewriteSystem<PolyRing<HRing>>;

std::shared_ptr<const BT1System> bt1_system();
std::shared_ptr<const TwoLevelSystem> bt2_two_level();
// Rule list of the two-level system, for building variants.
std::vector<TwoLevelSystem::Rule> bt2_two_level_rules();

// H(BT^2) in ten generators. Elements are flat polynomials; normalization
// passes through the two-level system, whose normal monomials flatten
// injectively.
template <class CR>
class BT2Model {
 public:
  using V = typename CR::value_type;
  using Bt1 = RewriteSystem<CR>;
  using Two = RewriteSystem<PolyRing<CR>>;
  using TwoElem = typename Two::Elem;
  using Elem = Poly<V>;

  BT2Model(std::shared_ptr<const Bt1> bt1, std::shared_ptr<const Two> two)
      : bt1_(std::move(bt1)), two_(std::move(two)), flat_(flat_generators()) {}

  const Bt1& bt1() const { return *bt1_; }
  std::shared_ptr<const Bt1> bt1_ptr() const { return bt1_; }
  const Two& two() const { return *two_; }
  const GeneratorSet& gens() const { return *flat_; }
  const CR& ring() const { return bt1_->ring(); }

  static std::pair<Monomial, Monomial> split(const Monomial& f) {
    Monomial c, e;
    std::int32_t a = std::min(f[fg::z00], f[fg::z01]);
    std::int32_t b = std::min(f[fg::z10], f[fg::z11]);
    c[bt1g::z0] = a;
    c[bt1g::z1] = b;
    c[bt1g::cxw] = f[fg::cxw1];
    c[bt1g::cw] = f[fg::cw1];
    e[eg::z00] = f[fg::z00] - a;
    e[eg::z01] = f[fg::z01] - a;
    e[eg::z10] = f[fg::z10] - b;
    e[eg::z11] = f[fg::z11] - b;
    e[eg::cxw2] = f[fg::cxw2];
    e[eg::cw2] = f[fg::cw2];
    e[eg::cxT] = f[fg::cxT];
    e[eg::cT] = f[fg::cT];
    return {c, e};
  }

  static Monomial join(const Monomial& c, const Monomial& e) {
    Monomial f;
    f[fg::z00] = e[eg::z00] + c[bt1g::z0];
    f[fg::z01] = e[eg::z01] + c[bt1g::z0];
    f[fg::z10] = e[eg::z10] + c[bt1g::z1];
    f[fg::z11] = e[eg::z11] + c[bt1g::z1];
    f[fg::cxw1] = c[bt1g::cxw];
    f[fg::cw1] = c[bt1g::cw];
    f[fg::cxw2] = e[eg::cxw2];
    f[fg::cw2] = e[eg::cw2];
    f[fg::cxT] = e[eg::cxT];
    f[fg::cT] = e[eg::cT];
    return f;
  }

  TwoElem unflatten(const Elem& x) const {
    std::map<Monomial, typename Bt1::Elem> grouped;
    for (const auto& [m, c] : x) {
      auto [cm, em] = split(m);
      poly_add_term(ring(), grouped[em], cm, c);
    }
    TwoElem out;
    for (auto& [em, p] : grouped) poly_add_term(two_->ring(), out, em, bt1_->reduce(p));
    return out;
  }

  Elem flatten(const TwoElem& x) const {
    Elem out;
    for (const auto& [em, p] : x)
      for (const auto& [cm, c] : p) poly_add_term(ring(), out, join(cm, em), c);
    return out;
  }

  Elem normalize(const Elem& x) const { return flatten(two_->reduce(unflatten(x))); }
  bool is_normal(const Monomial& f) const {
    auto [cm, em] = split(f);
    return bt1_->is_normal(cm) && two_->is_normal(em);
  }

  Elem mul(const Elem& a, const Elem& b) const { return normalize(poly_mul_raw(ring(), a, b)); }
  Elem add(const Elem& a, const Elem& b) const { return poly_add(ring(), a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly_sub(ring(), a, b); }
  Elem neg(const Elem& a) const { return poly_neg(ring(), a); }
  Elem pow(const Elem& a, int k) const {
    Elem r = one();
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  Elem constant(const V& c) const {
    Elem r;
    poly_add_term(ring(), r, Monomial{}, c);
    return r;
  }
  Elem one() const { return constant(ring().one()); }
  Elem integer(Int c) const { return constant(ring().from_int(c)); }
  Elem term(const V& c, const Monomial& m) const {
    Elem r;
    poly_add_term(ring(), r, m, c);
    return normalize(r);
  }
  Elem mono(const Monomial& m) const { return term(ring().one(), m); }
  Elem gen(int i) const { return mono(Monomial::var(i)); }
  Elem gen(const std::string& name) const {
    auto i = flat_->index(name);
    if (!i) throw std::invalid_argument("unknown generator " + name);
    return gen(*i);
  }
  Elem scale(const V& c, const Elem& x) const { return mul(constant(c), x); }

  std::string str(const Elem& x) const { return poly_str(ring(), *flat_, x); }

  std::optional<GradingBT2> grading(const Elem& x) const
    requires GradedCoeffRing<CR>
  {
    std::optional<GradingBT2> g;
    for (const auto& [m, c] : x) {
      auto cg = ring().grading(c);
      if (!cg) continue;
      GradingBT2 t = *cg + flat_->grading(m);
      if (g && *g != t) throw GradingMismatch("inhomogeneous element " + str(x));
      g = t;
    }
    return g;
  }

 private:
  std::shared_ptr<const Bt1> bt1_;
  std::shared_ptr<const Two> two_;
  std::shared_ptr<const GeneratorSet> flat_;
};

using BT2 = BT2Model<HRing>;
using BT2Elem = BT2::Elem;

const BT2& bt2();
// Coefficients pushed through h_rho (Z[iota^+-1]), h_phi (Z[e^+-1]), mod N (Z/2).
const BT2Model<LaurentRing>& bt2_rho();
const BT2Model<LaurentRing>& bt2_phi();
const BT2Model<Mod2Ring>& bt2_mod_n();

template <class CR, class F>
BT2Model<CR> make_bt2_base_change(CR ring, F f) {
  auto b1 = std::make_shared<const RewriteSystem<CR>>(base_change(*bt1_system(), ring, f));
  PolyRing<CR> cring{b1};
  auto two = std::make_shared<const RewriteSystem<PolyRing<CR>>>(
      base_change(*bt2_two_level(), cring, [&](const BT1Elem& p) {
        return b1->reduce(map_coeffs(ring, p, f));
      }));
  return BT2Model<CR>(b1, two);
}

template <class CR2, class CR1, class F>
typename BT2Model<CR2>::Elem bt2_map_coeffs(const BT2Model<CR2>& target,
                                            const typename BT2Model<CR1>::Elem& x, F f) {
  return target.normalize(map_coeffs(target.ring(), x, f));
}

// Theorem-level relations: pairs (lhs, rhs) in the flat model over H.
struct Relation {
  std::string name;
  BT2Elem lhs;
  BT2Elem rhs;
};
std::vector<Relation> bt2_relations();

// ---- basis enumeration --------------------------------------------------

struct Window {
  Int a_min = 0, a_max = 0, b_min = 0, b_max = 0;
  bool contains(Int a, Int b) const { return a >= a_min && a <= a_max && b >= b_min && b <= b_max; }
};

struct BasisCell {
  GradingRO2 cell;  // grading minus the coset representative
  std::vector<Monomial> monomials;
};

constexpr Int kExponentCap = 64;

std::vector<BasisCell> basis_enumerate(const GradingBT2& coset, const Window& w);
std::map<std::pair<Int, Int>, Int> basis_count_grid(const GradingBT2& coset, const Window& w);
// Normal monomials of the coset with rho-degree d (all cells).
std::vector<Monomial> basis_by_rho_degree(const GradingBT2& coset, Int d);
// The 13-monomial exclusion list for a flat H-basis, and the monomials it
// admits. It is not a basis: see flat_exclusion_enumerate vs basis_enumerate.
const std::vector<Monomial>& flat_exclusions();
std::vector<BasisCell> flat_exclusion_enumerate(const GradingBT2& coset, const Window& w);
std::vector<BasisCell> bt1_basis_enumerate(const GradingBT1& coset, const Window& w);
std::map<std::pair<Int, Int>, Int> bt1_basis_count_grid(const GradingBT1& coset, const Window& w);

// Free polynomial ring on the BU(2) symbols over H; relations are decided
// through s* images.
using BU2Poly = Poly<HCoeff>;

}  // namespace eqc
