// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include "equicohom/rings.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>

namespace eqc {

namespace {

GradingBT2 W(int i, int j) { return GradingBT2::omega(i, j); }
GradingBT2 two() { return GradingBT2::ro2(2, 0); }

Monomial mono_of(std::initializer_list<std::pair<int, int>> exps) {
  Monomial m;
  for (auto [i, k] : exps) m[i] += k;
  return m;
}

// Calls fn on every exponent vector of length k with entries summing to n.
void compositions(int k, Int n, const std::function<void(const std::vector<Int>&)>& fn) {
  std::vector<Int> v(k, 0);
  std::function<void(int, Int)> rec = [&](int i, Int left) {
    if (i == k - 1) {
      v[i] = left;
      fn(v);
      return;
    }
    for (Int x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (k == 0) {
    if (n == 0) fn(v);
    return;
  }
  rec(0, n);
}

}  // namespace

std::shared_ptr<const GeneratorSet> bt1_generators() {
  // Gradings embedded through pi1: W0 -> W00 + W01, W1 -> W10 + W11.
  static const auto gens = std::make_shared<const GeneratorSet>(
      "bt1", std::vector<std::string>{"z0", "z1", "cxw", "cw"}, std::vector<int>{1, 1, 2, 2},
      std::vector<GradingBT2>{W(0, 0) + W(0, 1), W(1, 0) + W(1, 1), two() + W(0, 0) + W(0, 1),
                              two() + W(1, 0) + W(1, 1)});
  return gens;
}

std::shared_ptr<const GeneratorSet> e_generators() {
  static const auto gens = std::make_shared<const GeneratorSet>(
      "bt2-e",
      std::vector<std::string>{"z00", "z01", "z10", "z11", "cxw2", "cw2", "cxT", "cT"},
      std::vector<int>{1, 1, 1, 1, 2, 2, 4, 4},
      std::vector<GradingBT2>{W(0, 0), W(0, 1), W(1, 0), W(1, 1), two() + W(0, 0) + W(1, 0),
                              two() + W(0, 1) + W(1, 1), two() + W(0, 0) + W(1, 1),
                              two() + W(0, 1) + W(1, 0)});
  return gens;
}

std::shared_ptr<const GeneratorSet> flat_generators() {
  static const auto gens = std::make_shared<const GeneratorSet>(
      "bt2",
      std::vector<std::string>{"z00", "z01", "z10", "z11", "cxw1", "cw1", "cxw2", "cw2", "cxT",
                               "cT"},
      std::vector<int>{1, 1, 1, 1, 2, 2, 2, 2, 4, 4},
      std::vector<GradingBT2>{W(0, 0), W(0, 1), W(1, 0), W(1, 1), two() + W(0, 0) + W(0, 1),
                              two() + W(1, 0) + W(1, 1), two() + W(0, 0) + W(1, 0),
                              two() + W(0, 1) + W(1, 1), two() + W(0, 0) + W(1, 1),
                              two() + W(0, 1) + W(1, 0)});
  return gens;
}

std::shared_ptr<const GeneratorSet> bu2_generators() {
  // Gradings are s* images: W0 -> W00, W1 -> W01 + W10, W2 -> W11.
  GradingBT2 w0 = W(0, 0), w1 = W(0, 1) + W(1, 0), w2 = W(1, 1);
  GradingBT2 four = GradingBT2::ro2(4, 0);
  static const auto gens = std::make_shared<const GeneratorSet>(
      "bu2", std::vector<std::string>{"Z0", "Z1", "Z2", "cL", "cxL", "cW", "cxW"},
      std::vector<int>{1, 1, 1, 2, 2, 4, 4},
      std::vector<GradingBT2>{w0, w1, w2, two() + w1, two() + w0 + w2, four + w1 + w2 + w2,
                              four + w0 + w0 + w1});
  return gens;
}

std::shared_ptr<const BT1System> bt1_system() {
  static const auto sys = [] {
    using Rule = BT1System::Rule;
    HRing h;
    BT1Elem r_zz, r_fund, r_z0sq;
    r_zz[Monomial{}] = HCoeff::xi();
    r_fund[mono_of({{bt1g::z0, 1}, {bt1g::cw, 1}})] = HCoeff(1) - HCoeff::kappa();
    r_fund[Monomial{}] = HCoeff::e(2);
    r_z0sq[mono_of({{bt1g::cxw, 1}})] = HCoeff::xi();
    r_z0sq[mono_of({{bt1g::z0, 1}})] = HCoeff::e(2);
    std::vector<Rule> rules = {
        {"B1", mono_of({{bt1g::z0, 1}, {bt1g::z1, 1}}), r_zz},
        {"B2", mono_of({{bt1g::z1, 1}, {bt1g::cxw, 1}}), r_fund},
        {"B3", mono_of({{bt1g::z0, 2}, {bt1g::cw, 1}}), r_z0sq},
    };
    return std::make_shared<const BT1System>(bt1_generators(), h, std::move(rules));
  }();
  return sys;
}

std::vector<TwoLevelSystem::Rule> bt2_two_level_rules() {
  const auto& b1 = *bt1_system();
  auto c = [&](const HCoeff& h) { return b1.constant(h); };
  const BT1Elem one = c(HCoeff(1));
  const BT1Elem z0 = b1.gen(bt1g::z0), z1 = b1.gen(bt1g::z1);
  const BT1Elem cw1 = b1.gen(bt1g::cw), cxw1 = b1.gen(bt1g::cxw);
  const BT1Elem omk = c(HCoeff(1) - HCoeff::kappa());
  const BT1Elem eps1 = b1.mul(c(HCoeff::u(1)), b1.mul(z0, cw1));
  const BT1Elem ome = b1.sub(one, eps1);
  const BT1Elem omk_ome = b1.mul(omk, ome);
  auto M = [](std::initializer_list<std::pair<int, int>> e) { return mono_of(e); };
  using TE = TwoLevelSystem::Elem;
  auto T = [](std::initializer_list<std::pair<BT1Elem, Monomial>> terms) {
    TE r;
    for (const auto& [p, m] : terms) {
      auto [it, fresh] = r.emplace(m, p);
      if (!fresh) throw std::logic_error("duplicate term in rule");
    }
    return r;
  };
  auto negate = [&](const BT1Elem& p) { return b1.neg(p); };
  return {
      {"R1", M({{eg::z00, 1}, {eg::z01, 1}}), T({{z0, {}}})},
      {"R2", M({{eg::z10, 1}, {eg::z11, 1}}), T({{z1, {}}})},
      {"R3", M({{eg::z01, 1}, {eg::z11, 1}, {eg::cxw2, 1}}),
       T({{omk, M({{eg::z00, 1}, {eg::z10, 1}, {eg::cw2, 1}})}, {c(HCoeff::e(2)), {}}})},
      {"R4", M({{eg::z00, 2}, {eg::cw2, 1}}),
       T({{z0, M({{eg::cxT, 1}})},
          {negate(b1.mul(omk_ome, cxw1)), M({{eg::z00, 1}, {eg::z11, 1}})}})},
      {"R5", M({{eg::z10, 2}, {eg::cw2, 1}}),
       T({{z1, M({{eg::cT, 1}})}, {negate(b1.mul(ome, cw1)), M({{eg::z01, 1}, {eg::z10, 1}})}})},
      {"R6", M({{eg::z01, 2}, {eg::cxw2, 1}}),
       T({{z0, M({{eg::cT, 1}})},
          {negate(b1.mul(omk_ome, cxw1)), M({{eg::z01, 1}, {eg::z10, 1}})}})},
      {"R7", M({{eg::z11, 2}, {eg::cxw2, 1}}),
       T({{z1, M({{eg::cxT, 1}})}, {negate(b1.mul(ome, cw1)), M({{eg::z00, 1}, {eg::z11, 1}})}})},
      {"R8", M({{eg::z00, 1}, {eg::cT, 1}}),
       T({{cxw1, M({{eg::z10, 1}})}, {omk_ome, M({{eg::z01, 1}, {eg::cxw2, 1}})}})},
      {"R9", M({{eg::z11, 1}, {eg::cT, 1}}),
       T({{cw1, M({{eg::z01, 1}})}, {ome, M({{eg::z10, 1}, {eg::cw2, 1}})}})},
      {"R10", M({{eg::z01, 1}, {eg::cxT, 1}}),
       T({{cxw1, M({{eg::z11, 1}})}, {omk_ome, M({{eg::z00, 1}, {eg::cw2, 1}})}})},
      {"R11", M({{eg::z10, 1}, {eg::cxT, 1}}),
       T({{cw1, M({{eg::z00, 1}})}, {ome, M({{eg::z11, 1}, {eg::cxw2, 1}})}})},
      {"R12", M({{eg::cT, 1}, {eg::cxT, 1}}),
       T({{b1.mul(cw1, cxw1), {}},
          {one, M({{eg::cw2, 1}, {eg::cxw2, 1}})},
          {b1.mul(c(HCoeff::t(2)), b1.mul(z0, cw1)),
           M({{eg::z00, 1}, {eg::z10, 1}, {eg::cw2, 1}})}})},
  };
}

std::shared_ptr<const TwoLevelSystem> bt2_two_level() {
  static const auto sys = std::make_shared<const TwoLevelSystem>(
      e_generators(), PolyRing<HRing>{bt1_system()}, bt2_two_level_rules());
  return sys;
}

const BT2& bt2() {
  static const BT2 model(bt1_system(), bt2_two_level());
  return model;
}

const BT2Model<LaurentRing>& bt2_rho() {
  static const auto model = make_bt2_base_change(LaurentRing{"iota"}, h_rho);
  return model;
}

const BT2Model<LaurentRing>& bt2_phi() {
  static const auto model = make_bt2_base_change(LaurentRing{"e"}, h_phi);
  return model;
}

const BT2Model<Mod2Ring>& bt2_mod_n() {
  static const auto model = make_bt2_base_change(Mod2Ring{}, h_mod_n);
  return model;
}

std::vector<Relation> bt2_relations() {
  using namespace fg;
  auto t = [](const HCoeff& c, std::initializer_list<std::pair<int, int>> e) {
    BT2Elem r;
    poly_add_term(HRing{}, r, mono_of(e), c);
    return r;
  };
  auto sum = [](std::initializer_list<BT2Elem> xs) {
    BT2Elem r;
    for (const auto& x : xs) r = poly_add(HRing{}, r, x);
    return r;
  };
  const HCoeff one(1), omk = HCoeff(1) - HCoeff::kappa(), u1 = HCoeff::u(1);
  return {
      {"zeta product", t(one, {{z00, 1}, {z01, 1}, {z10, 1}, {z11, 1}}), t(HCoeff::xi(), {})},
      {"z10*z11*cxw1", t(one, {{z10, 1}, {z11, 1}, {cxw1, 1}}),
       sum({t(omk, {{z00, 1}, {z01, 1}, {cw1, 1}}), t(HCoeff::e(2), {})})},
      {"z01*z11*cxw2", t(one, {{z01, 1}, {z11, 1}, {cxw2, 1}}),
       sum({t(omk, {{z00, 1}, {z10, 1}, {cw2, 1}}), t(HCoeff::e(2), {})})},
      {"z00*cT", t(one, {{z00, 1}, {cT, 1}}),
       sum({t(one, {{z10, 1}, {cxw1, 1}}), t(one, {{z01, 1}, {cxw2, 1}}),
            t(-u1, {{z01, 1}, {z10, 1}, {z11, 1}, {cxw1, 1}, {cxw2, 1}})})},
      {"z11*cT", t(one, {{z11, 1}, {cT, 1}}),
       sum({t(one, {{z01, 1}, {cw1, 1}}), t(one, {{z10, 1}, {cw2, 1}}),
            t(-u1, {{z00, 1}, {z01, 1}, {z10, 1}, {cw1, 1}, {cw2, 1}})})},
      {"z01*cxT", t(one, {{z01, 1}, {cxT, 1}}),
       sum({t(one, {{z11, 1}, {cxw1, 1}}), t(one, {{z00, 1}, {cw2, 1}}),
            t(-u1, {{z00, 1}, {z10, 1}, {z11, 1}, {cxw1, 1}, {cw2, 1}})})},
      {"z10*cxT", t(one, {{z10, 1}, {cxT, 1}}),
       sum({t(one, {{z00, 1}, {cw1, 1}}), t(one, {{z11, 1}, {cxw2, 1}}),
            t(-u1, {{z00, 1}, {z01, 1}, {z11, 1}, {cw1, 1}, {cxw2, 1}})})},
      {"cT*cxT", t(one, {{cT, 1}, {cxT, 1}}),
       sum({t(one, {{cw1, 1}, {cxw1, 1}}), t(one, {{cw2, 1}, {cxw2, 1}}),
            t(HCoeff::t(2), {{z00, 2}, {z01, 1}, {z10, 1}, {cw1, 1}, {cw2, 1}})})},
  };
}

namespace {

// Monomials with c-degree n in the coset, one per c-vector (the zeta part is
// forced up to the zeta product). keep() filters them.
std::vector<Monomial> coset_monomials(const GradingBT2& coset, Int n,
                                      const std::function<bool(const Monomial&)>& keep) {
  const GeneratorSet& gens = *flat_generators();
  const int cslots[6] = {fg::cxw1, fg::cw1, fg::cxw2, fg::cw2, fg::cxT, fg::cT};
  std::vector<Monomial> out;
  compositions(6, n, [&](const std::vector<Int>& cv) {
    Monomial f;
    for (int i = 0; i < 6; ++i) f[cslots[i]] = static_cast<std::int32_t>(cv[i]);
    GradingBT2 d = coset - gens.grading(f);
    Int mu[4] = {d.m00(), d.m01(), d.m10(), 0};
    Int k = 0;
    for (Int x : mu) k = std::max(k, -x);
    for (int i = 0; i < 4; ++i) {
      Int a = mu[i] + k;
      if (a > kExponentCap) throw ResourceError("zeta exponent exceeds the cap");
      f[i] = static_cast<std::int32_t>(a);
    }
    if (keep(f)) out.push_back(f);
  });
  return out;
}

std::vector<BasisCell> enumerate_cells(const GradingBT2& coset, const Window& w,
                                       const std::function<bool(const Monomial&)>& keep) {
  if (w.a_max < w.a_min || w.b_max < w.b_min) return {};
  Int dmax = checked_add(w.a_max, w.b_max) + rho_deg(coset);
  if (dmax < 0) return {};
  Int nmax = dmax / 2;
  if (nmax > kExponentCap) throw ResourceError("window exceeds the exponent cap");
  const GeneratorSet& gens = *flat_generators();
  std::vector<std::vector<Monomial>> levels(static_cast<std::size_t>(nmax + 1));
  parallel_for(levels.size(), [&](std::size_t n) { levels[n] = coset_monomials(coset, static_cast<Int>(n), keep); });
  std::map<std::pair<Int, Int>, std::vector<Monomial>> cells;
  for (const auto& level : levels)
    for (const auto& f : level) {
      GradingRO2 cell = (gens.grading(f) - coset).as_ro2();
      if (w.contains(cell.a, cell.b)) cells[{cell.a, cell.b}].push_back(f);
    }
  std::vector<BasisCell> out;
  for (auto& [ab, ms] : cells) {
    std::sort(ms.begin(), ms.end(),
              [&](const Monomial& x, const Monomial& y) { return gens.compare(x, y) < 0; });
    out.push_back({{ab.first, ab.second}, std::move(ms)});
  }
  return out;
}

}  // namespace

std::vector<BasisCell> basis_enumerate(const GradingBT2& coset, const Window& w) {
  const BT2& model = bt2();
  return enumerate_cells(coset, w, [&](const Monomial& f) { return model.is_normal(f); });
}

std::vector<Monomial> basis_by_rho_degree(const GradingBT2& coset, Int d) {
  if (d < 0 || d % 2 != 0) return {};
  if (d / 2 > kExponentCap) throw ResourceError("degree exceeds the exponent cap");
  const BT2& model = bt2();
  auto ms = coset_monomials(coset, d / 2, [&](const Monomial& f) { return model.is_normal(f); });
  std::sort(ms.begin(), ms.end(),
            [&](const Monomial& x, const Monomial& y) { return model.gens().compare(x, y) < 0; });
  return ms;
}

const std::vector<Monomial>& flat_exclusions() {
  static const std::vector<Monomial> list = {
      mono_of({{fg::z00, 1}, {fg::z01, 1}, {fg::z10, 1}, {fg::z11, 1}}),
      mono_of({{fg::z10, 1}, {fg::z11, 1}, {fg::cxw1, 1}}),
      mono_of({{fg::z01, 1}, {fg::z11, 1}, {fg::cxw2, 1}}),
      mono_of({{fg::z00, 2}, {fg::z01, 2}, {fg::cw1, 1}}),
      mono_of({{fg::z00, 2}, {fg::cw2, 1}}),
      mono_of({{fg::z10, 2}, {fg::cw2, 1}}),
      mono_of({{fg::z01, 2}, {fg::cxw2, 1}}),
      mono_of({{fg::z11, 2}, {fg::cxw2, 1}}),
      mono_of({{fg::z00, 1}, {fg::cT, 1}}),
      mono_of({{fg::z11, 1}, {fg::cT, 1}}),
      mono_of({{fg::z01, 1}, {fg::cxT, 1}}),
      mono_of({{fg::z10, 1}, {fg::cxT, 1}}),
      mono_of({{fg::cT, 1}, {fg::cxT, 1}}),
  };
  return list;
}

std::vector<BasisCell> flat_exclusion_enumerate(const GradingBT2& coset, const Window& w) {
  return enumerate_cells(coset, w, [](const Monomial& f) {
    return std::none_of(flat_exclusions().begin(), flat_exclusions().end(),
                        [&](const Monomial& x) { return x.divides(f); });
  });
}

std::map<std::pair<Int, Int>, Int> basis_count_grid(const GradingBT2& coset, const Window& w) {
  std::map<std::pair<Int, Int>, Int> grid;
  for (const auto& c : basis_enumerate(coset, w))
    grid[{c.cell.a, c.cell.b}] = static_cast<Int>(c.monomials.size());
  return grid;
}

std::vector<BasisCell> bt1_basis_enumerate(const GradingBT1& coset, const Window& w) {
  if (w.a_max < w.a_min || w.b_max < w.b_min) return {};
  Int dmax = checked_add(w.a_max, w.b_max);
  if (dmax < 0) return {};
  Int nmax = dmax / 2;
  if (nmax > kExponentCap) throw ResourceError("window exceeds the exponent cap");
  const BT1System& sys = *bt1_system();
  auto grading1 = [](const Monomial& m) {
    // Intrinsic BT1 grading: z0 -> W0, z1 -> W1, cxw -> 2 + W0, cw -> 2 + W1.
    Int c = m[bt1g::cxw] + m[bt1g::cw];
    return GradingBT1::raw(2 * c, 0, m[bt1g::z0] + m[bt1g::cxw], m[bt1g::z1] + m[bt1g::cw]);
  };
  std::map<std::pair<Int, Int>, std::vector<Monomial>> cells;
  for (Int n = 0; n <= nmax; ++n) {
    compositions(2, n, [&](const std::vector<Int>& cv) {
      Monomial f;
      f[bt1g::cxw] = static_cast<std::int32_t>(cv[0]);
      f[bt1g::cw] = static_cast<std::int32_t>(cv[1]);
      GradingBT1 d = coset - grading1(f);
      Int k = std::max<Int>(0, -d.m0());
      f[bt1g::z0] = static_cast<std::int32_t>(d.m0() + k);
      f[bt1g::z1] = static_cast<std::int32_t>(k);
      if (f[bt1g::z0] > kExponentCap || k > kExponentCap)
        throw ResourceError("zeta exponent exceeds the cap");
      if (!sys.is_normal(f)) return;
      GradingBT1 diff = grading1(f) - coset;
      if (!diff.in_ro2()) throw std::logic_error("bt1 enumeration left the coset");
      if (w.contains(diff.a(), diff.b())) cells[{diff.a(), diff.b()}].push_back(f);
    });
  }
  std::vector<BasisCell> out;
  for (auto& [ab, ms] : cells) {
    std::sort(ms.begin(), ms.end(), [&](const Monomial& x, const Monomial& y) {
      return sys.gens().compare(x, y) < 0;
    });
    out.push_back({{ab.first, ab.second}, std::move(ms)});
  }
  return out;
}

std::map<std::pair<Int, Int>, Int> bt1_basis_count_grid(const GradingBT1& coset,
                                                        const Window& w) {
  std::map<std::pair<Int, Int>, Int> grid;
  for (const auto& c : bt1_basis_enumerate(coset, w))
    grid[{c.cell.a, c.cell.b}] = static_cast<Int>(c.monomials.size());
  return grid;
}

}  // namespace eqc
