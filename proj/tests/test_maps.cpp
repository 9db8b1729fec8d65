// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "equicohom/expr.hpp"
#include "equicohom/maps.hpp"

namespace eqc {
namespace {

// Normal basis monomials of weight <= 8 from a few cosets, as elements.
std::vector<BT2Elem> basis_sample() {
  std::vector<BT2Elem> out;
  for (const char* coset : {"0", "W01+W10", "W00", "W11"}) {
    for (const auto& cell : basis_enumerate(parse_grading(coset), Window{-4, 6, -4, 8}))
      for (const auto& m : cell.monomials)
        if (flat_generators()->weight(m) <= 8) out.push_back(bt2().mono(m));
  }
  return out;
}

std::vector<std::pair<BT2Elem, BT2Elem>> pair_sample(std::size_t n) {
  auto b = basis_sample();
  std::mt19937 rng(41);
  std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
  std::vector<std::pair<BT2Elem, BT2Elem>> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(b[pick(rng)], b[pick(rng)]);
  return out;
}

BT2Elem rel_diff(const Relation& r) { return poly_sub(HRing{}, r.lhs, r.rhs); }

TEST(Maps, RhoIsMultiplicative) {
  const auto& T = rho_target();
  for (const auto& [a, b] : pair_sample(400)) {
    EXPECT_EQ(rho(bt2().mul(a, b)), T.mul(rho(a), rho(b))) << bt2().str(a) << " * " << bt2().str(b);
    EXPECT_EQ(rho(bt2().add(a, b)), T.add(rho(a), rho(b)));
  }
}

TEST(Maps, EtaAndPhiAreMultiplicative) {
  const auto& E = eta_target();
  const auto& F = phi_target();
  for (const auto& [a, b] : pair_sample(200)) {
    auto ab = bt2().mul(a, b);
    auto ea = eta(a), eb = eta(b), eab = eta(ab);
    auto pa = phi(a), pb = phi(b), pab = phi(ab);
    for (int c = 0; c < 4; ++c) {
      EXPECT_EQ(eab[c], E.mul(ea[c], eb[c])) << c << ": " << bt2().str(a) << " * " << bt2().str(b);
      EXPECT_EQ(pab[c], F.mul(pa[c], pb[c])) << c << ": " << bt2().str(a) << " * " << bt2().str(b);
    }
  }
}

TEST(Maps, PullbacksAreMultiplicative) {
  for (const auto& [a, b] : pair_sample(200)) {
    auto ab = bt2().mul(a, b);
    for (const char* name : {"delta", "chi1", "gamma"})
      EXPECT_EQ(pullback_bt2(name, ab), bt2().mul(pullback_bt2(name, a), pullback_bt2(name, b))) << name;
    EXPECT_EQ(t_star(ab), bt1_system()->mul(t_star(a), t_star(b)));
  }
}

TEST(Maps, PullbacksPreserveBt1Products) {
  const auto& s = *bt1_system();
  std::vector<BT1Elem> xs;
  for (const char* e : {"z0", "z1", "cw", "cxw", "z0*cw", "z1*cw", "cxw^2", "(1-kappa)*z0"}) xs.push_back(parse_bt1(e));
  for (const auto& a : xs)
    for (const auto& b : xs) {
      EXPECT_EQ(pi1_star(s.mul(a, b)), bt2().mul(pi1_star(a), pi1_star(b)));
      EXPECT_EQ(pi2_star(s.mul(a, b)), bt2().mul(pi2_star(a), pi2_star(b)));
    }
  EXPECT_TRUE(pi1_star(BT1Elem{}).empty());
}

TEST(Maps, SstarIsMultiplicative) {
  std::vector<BU2Poly> xs;
  for (const char* e : {"Z0", "Z1", "Z2", "cL", "cxL", "cW", "cxW", "Z0*cL", "u[1]*Z2", "kappa*cxW"})
    xs.push_back(parse_bu2(e));
  for (const auto& a : xs)
    for (const auto& b : xs) EXPECT_EQ(sstar(bu2_mul(a, b)), bt2().mul(sstar(a), sstar(b)));
}

TEST(Maps, InvolutionsOnGenerators) {
  for (const auto& name : flat_generators()->names()) {
    BT2Elem g = bt2().gen(name);
    EXPECT_EQ(delta_star(delta_star(g)), g) << name;
    EXPECT_EQ(chi1_star(chi1_star(g)), g) << name;
    EXPECT_EQ(gamma_star(gamma_star(g)), g) << name;
  }
}

TEST(Maps, RelationsMapToZero) {
  for (const auto& r : bt2_relations()) {
    BT2Elem d = rel_diff(r);
    EXPECT_TRUE(rho(d).empty()) << r.name;
    for (const auto& c : eta(d)) EXPECT_TRUE(c.empty()) << r.name;
    for (const auto& c : phi(d)) EXPECT_TRUE(c.empty()) << r.name;
    EXPECT_TRUE(mod_n(d).empty()) << r.name;
  }
}

TEST(Maps, RhoIsGraded) {
  // Monomials in one grading have rho images of a single x-degree.
  for (const char* coset : {"0", "W01+W10"}) {
    for (const auto& cell : basis_enumerate(parse_grading(coset), Window{0, 6, 0, 10})) {
      std::set<Int> degrees;
      for (const auto& m : cell.monomials)
        for (const auto& [tm, c] : rho(bt2().mono(m))) degrees.insert(tm[tg::x1] + tm[tg::x2]);
      EXPECT_LE(degrees.size(), 1u) << coset << " at " << cell.cell.str();
    }
  }
}

TEST(Maps, PsiInvertsPhiBar) {
  std::vector<PhiElem> xs;
  for (const auto& b : basis_sample())
    if (flat_generators()->weight(b.begin()->first) <= 6) xs.push_back(to_phi_ring(b));
  ASSERT_FALSE(xs.empty());
  for (const auto& x : xs) EXPECT_EQ(psi(phi_bar(x)), x) << bt2_phi().str(x);
  for (const auto& x : xs) {
    TupleZ t = phi_bar(x);
    EXPECT_EQ(phi_bar(psi(t)), t);
  }
}

TEST(Maps, PhiFactorsThroughBaseChange) {
  for (const auto& b : basis_sample()) EXPECT_EQ(phi_bar(to_phi_ring(b)), phi(b));
}

TEST(Maps, EpsilonElementsAreDistinctUnits) {
  std::vector<BT2Elem> xs = {bt2().one(), bt2().constant(HCoeff::g()), epsilon1(), epsilon2(), epsilon_oplus()};
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) EXPECT_NE(xs[i], xs[j]);
  for (const auto& e : {epsilon1(), epsilon2(), epsilon_oplus()}) {
    BT2Elem u = bt2().sub(bt2().one(), e);
    EXPECT_EQ(bt2().mul(u, u), bt2().one());
  }
}

TEST(Maps, UnknownPullbackIsRejected) {
  EXPECT_THROW(pullback_bt2("nope", bt2().one()), std::invalid_argument);
}

}  // namespace
}  // namespace eqc
