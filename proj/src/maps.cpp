// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include "equicohom/maps.hpp"

#include <cstdlib>
#include <functional>

namespace eqc {

namespace {

// Flat c-generators: trivial set T(V) (as zeta slots) and root x_V.
struct CGen {
  int slot;
  std::array<int, 2> trivial;
  bool x1, x2;
};

const std::array<CGen, 6>& cgens() {
  static const std::array<CGen, 6> t{{
      {fg::cxw1, {tg::z00, tg::z01}, true, false},
      {fg::cw1, {tg::z10, tg::z11}, true, false},
      {fg::cxw2, {tg::z00, tg::z10}, false, true},
      {fg::cw2, {tg::z01, tg::z11}, false, true},
      {fg::cxT, {tg::z00, tg::z11}, true, true},
      {fg::cT, {tg::z01, tg::z10}, true, true},
  }};
  return t;
}

std::shared_ptr<const GeneratorSet> target_gens(const std::string& unit) {
  std::vector<GradingBT2> g(7, GradingBT2::ro2(0, 0));
  return std::make_shared<const GeneratorSet>(
      "target-" + unit, std::vector<std::string>{"z00", "z01", "z10", "z11", "x1", "x2", unit},
      std::vector<int>{1, 1, 1, 1, 1, 1, 1}, g);
}

template <class T>
typename T::Elem xv(const T& t, const CGen& c) {
  typename T::Elem r;
  if (c.x1) r = t.add(r, t.var(tg::x1));
  if (c.x2) r = t.add(r, t.var(tg::x2));
  return r;
}

Monomial zeta_set(const std::array<int, 2>& s, int k) {
  Monomial m;
  for (int i : s) m[i] += k;
  return m;
}

Monomial zeta_complement(const std::array<int, 2>& s, int k) {
  Monomial m;
  for (int i = tg::z00; i <= tg::z11; ++i)
    if (i != s[0] && i != s[1]) m[i] += k;
  return m;
}

bool in_set(const std::array<int, 2>& s, int c) { return s[0] == c || s[1] == c; }

Monomial others_inverse(int c) {
  Monomial m;
  for (int i = tg::z00; i <= tg::z11; ++i)
    if (i != c) m[i] = -1;
  return m;
}

std::vector<Poly<Int>> rho_images() {
  const auto& t = rho_target();
  std::vector<Poly<Int>> im(10);
  for (int i = 0; i < 4; ++i) im[i] = t.var(i);
  for (const auto& c : cgens()) im[c.slot] = t.mul(t.term(1, zeta_set(c.trivial, 1)), xv(t, c));
  return im;
}

std::vector<Poly<HCoeff>> eta_images(int c) {
  const auto& t = eta_target();
  std::vector<Poly<HCoeff>> im(10);
  for (int i = 0; i < 4; ++i)
    im[i] = (i == c) ? t.term(HCoeff::xi(), others_inverse(c)) : t.var(i);
  for (const auto& v : cgens()) {
    if (!in_set(v.trivial, c)) {
      im[v.slot] = t.mul(t.term(HCoeff(1), zeta_set(v.trivial, 1)), xv(t, v));
    } else {
      auto f = t.add(t.term(HCoeff::e(2), {}), t.mul(t.term(HCoeff::xi(), {}), xv(t, v)));
      im[v.slot] = t.mul(f, t.term(HCoeff(1), zeta_complement(v.trivial, -1)));
    }
  }
  return im;
}

// phi_bar images: h_phi applied to the eta images (xi -> 0, e -> e).
std::vector<Poly<Int>> phi_images(int c) {
  const auto& t = phi_target();
  std::vector<Poly<Int>> im(10);
  for (int i = 0; i < 4; ++i) im[i] = (i == c) ? Poly<Int>{} : t.var(i);
  for (const auto& v : cgens()) {
    if (!in_set(v.trivial, c))
      im[v.slot] = t.mul(t.term(1, zeta_set(v.trivial, 1)), xv(t, v));
    else
      im[v.slot] = t.term(1, zeta_complement(v.trivial, -1) * Monomial::var(tg::unit, 2));
  }
  return im;
}

Poly<Int> laurent_to_target(const IntTarget& t, const Laurent& l) {
  Poly<Int> r;
  for (const auto& [k, c] : l.terms()) r = t.add(r, t.term(c, Monomial::var(tg::unit, static_cast<std::int32_t>(k))));
  return r;
}

template <class T, class V, class S>
typename T::Elem hom(const T& t, const Poly<V>& x, const std::vector<typename T::Elem>& im, S scalar) {
  return apply_hom(
      x, im, [&](const auto& a, const auto& b) { return t.mul(a, b); },
      [&](const auto& a, const auto& b) { return t.add(a, b); }, scalar);
}

BT2Elem bt2_hom(const BT2Elem& x, const std::vector<BT2Elem>& im) {
  const auto& r = bt2();
  return hom(r, x, im, [&](const HCoeff& c) { return r.constant(c); });
}

BT2Elem H(const HCoeff& c) { return bt2().constant(c); }
BT2Elem G(int slot) { return bt2().gen(slot); }
BT2Elem M(std::initializer_list<std::pair<int, int>> exps) {
  Monomial m;
  for (auto [i, k] : exps) m[i] += k;
  return bt2().mono(m);
}
BT2Elem mul(std::initializer_list<BT2Elem> xs) {
  BT2Elem r = bt2().one();
  for (const auto& x : xs) r = bt2().mul(r, x);
  return r;
}
BT2Elem one_minus(const BT2Elem& x) { return bt2().sub(bt2().one(), x); }

}  // namespace

// ---- targets ----------------------------------------------------------------

const IntTarget& rho_target() {
  static const IntTarget t{IntRing{}, target_gens("iota"), true};
  return t;
}
const IntTarget& phi_target() {
  static const IntTarget t{IntRing{}, target_gens("e"), false};
  return t;
}
const HTarget& eta_target() {
  static const HTarget t{HRing{}, target_gens("unit"), false};
  return t;
}

Poly<Int> rho(const BT2Elem& x) {
  static const auto im = rho_images();
  const auto& t = rho_target();
  return hom(t, x, im, [&](const HCoeff& c) { return laurent_to_target(t, h_rho(c)); });
}

Poly<Int> rho_base(const BT2Model<LaurentRing>::Elem& x) {
  static const auto im = rho_images();
  const auto& t = rho_target();
  return hom(t, x, im, [&](const Laurent& c) { return laurent_to_target(t, c); });
}

Poly<HCoeff> eta(int c, const BT2Elem& x) {
  static const std::array<std::vector<Poly<HCoeff>>, 4> im{eta_images(0), eta_images(1), eta_images(2),
                                                           eta_images(3)};
  const auto& t = eta_target();
  return hom(t, x, im.at(c), [&](const HCoeff& v) { return t.term(v, {}); });
}

TupleH eta(const BT2Elem& x) { return {eta(0, x), eta(1, x), eta(2, x), eta(3, x)}; }

Poly<Int> phi_bar(int c, const PhiElem& x) {
  static const std::array<std::vector<Poly<Int>>, 4> im{phi_images(0), phi_images(1), phi_images(2),
                                                        phi_images(3)};
  const auto& t = phi_target();
  return hom(t, x, im.at(c), [&](const Laurent& v) { return laurent_to_target(t, v); });
}

TupleZ phi_bar(const PhiElem& x) { return {phi_bar(0, x), phi_bar(1, x), phi_bar(2, x), phi_bar(3, x)}; }

PhiElem to_phi_ring(const BT2Elem& x) {
  return bt2_map_coeffs<LaurentRing, HRing>(bt2_phi(), x, [](const HCoeff& c) { return h_phi(c); });
}

TupleZ phi(const BT2Elem& x) { return phi_bar(to_phi_ring(x)); }

PhiElem psi_component(int c, const Poly<Int>& x) {
  const auto& P = bt2_phi();
  auto emono = [&](Int k, const Monomial& m) { return P.term(Laurent::monomial(1, k), m); };
  // psi(zeta_kl^-1 E_c) = e^-4 (prod of zetas other than c) (prod of V with c in T(V), kl not in T(V)).
  auto inv = [&](int kl) {
    Monomial m;
    for (int i = tg::z00; i <= tg::z11; ++i)
      if (i != c) m[i] += 1;
    for (const auto& v : cgens())
      if (in_set(v.trivial, c) && !in_set(v.trivial, kl)) m[v.slot] += 1;
    return emono(-4, m);
  };
  int opp = 3 - c;  // c + 11
  PhiElem idem = P.mul(P.gen(opp), inv(opp));
  std::array<PhiElem, 4> zinv;
  for (int i = 0; i < 4; ++i)
    if (i != c) zinv[i] = inv(i);
  PhiElem xs[2] = {P.mul(emono(-2, {}), P.mul(P.gen(fg::cw1), P.gen(fg::cxw1))),
                   P.mul(emono(-2, {}), P.mul(P.gen(fg::cw2), P.gen(fg::cxw2)))};
  PhiElem out;
  for (const auto& [m, coef] : x) {
    PhiElem t = P.mul(idem, emono(m[tg::unit], {}));
    t = P.mul(t, P.integer(coef));
    for (int i = 0; i < 4; ++i) {
      int k = m[i];
      if (k == 0) continue;
      if (i == c) throw std::domain_error("component variable is not in the fixed-point ring");
      for (int j = 0; j < std::abs(k); ++j) t = P.mul(t, k > 0 ? P.gen(i) : zinv[i]);
    }
    for (int j = 0; j < 2; ++j) {
      int k = m[tg::x1 + j];
      if (k < 0) throw std::domain_error("negative power of x");
      for (int r = 0; r < k; ++r) t = P.mul(t, xs[j]);
    }
    out = P.add(out, t);
  }
  return out;
}

PhiElem psi(const TupleZ& x) {
  PhiElem out;
  for (int c = 0; c < 4; ++c) out = bt2_phi().add(out, psi_component(c, x[c]));
  return out;
}

// ---- epsilon and duals -----------------------------------------------------

BT2Elem epsilon1() { return bt2().term(HCoeff::u(1), Monomial::var(fg::z00) * Monomial::var(fg::z01) * Monomial::var(fg::cw1)); }
BT2Elem epsilon2() { return bt2().term(HCoeff::u(1), Monomial::var(fg::z00) * Monomial::var(fg::z10) * Monomial::var(fg::cw2)); }
BT2Elem epsilon_oplus() {
  return bt2().term(HCoeff::u(2), Monomial::var(fg::z00, 2) * Monomial::var(fg::z01) * Monomial::var(fg::z10) *
                                      Monomial::var(fg::cw1) * Monomial::var(fg::cw2));
}

BT2Elem dual_generator(int slot) {
  static const std::map<int, BT2Elem> table = [] {
    const auto& r = bt2();
    BT2Elem k = one_minus(H(HCoeff::kappa()));
    BT2Elem e1 = one_minus(epsilon1()), e2 = one_minus(epsilon2());
    std::map<int, BT2Elem> t;
    t[fg::cw1] = r.neg(mul({e1, G(fg::cw1)}));
    t[fg::cxw1] = r.neg(mul({k, e1, G(fg::cxw1)}));
    t[fg::cw2] = r.neg(mul({e2, G(fg::cw2)}));
    t[fg::cxw2] = r.neg(mul({k, e2, G(fg::cxw2)}));
    t[fg::cT] = r.neg(mul({e1, e2, G(fg::cT)}));
    t[fg::cxT] = r.neg(mul({k, e1, e2, G(fg::cxT)}));
    return t;
  }();
  auto it = table.find(slot);
  if (it == table.end()) throw std::invalid_argument("no dual class for this generator");
  return it->second;
}

// ---- pullbacks --------------------------------------------------------------

BT2Elem sstar(const BU2Poly& x) {
  static const std::vector<BT2Elem> im{
      G(fg::z00), M({{fg::z01, 1}, {fg::z10, 1}}), G(fg::z11), G(fg::cT), G(fg::cxT),
      M({{fg::cw1, 1}, {fg::cw2, 1}}), M({{fg::cxw1, 1}, {fg::cxw2, 1}})};
  return bt2_hom(x, im);
}

BT2Elem delta_star(const BT2Elem& x) {
  static const std::vector<BT2Elem> im = [] {
    std::vector<BT2Elem> v;
    for (int i = 0; i < 4; ++i) v.push_back(G(i));
    for (int i = 4; i < 10; ++i) v.push_back(dual_generator(i));
    return v;
  }();
  return bt2_hom(x, im);
}

BT2Elem chi1_star(const BT2Elem& x) {
  static const std::vector<BT2Elem> im{G(fg::z10), G(fg::z11), G(fg::z00),  G(fg::z01), G(fg::cw1),
                                       G(fg::cxw1), G(fg::cxw2), G(fg::cw2), G(fg::cT),  G(fg::cxT)};
  return bt2_hom(x, im);
}

BT2Elem gamma_star(const BT2Elem& x) {
  static const std::vector<BT2Elem> im{G(fg::z00), G(fg::z10), G(fg::z01), G(fg::z11), G(fg::cxw2),
                                       G(fg::cw2), G(fg::cxw1), G(fg::cw1), G(fg::cxT), G(fg::cT)};
  return bt2_hom(x, im);
}

BT1Elem t_star(const BT2Elem& x) {
  const auto& s = *bt1_system();
  static const std::vector<BT1Elem> im = [] {
    const auto& s = *bt1_system();
    return std::vector<BT1Elem>{s.constant(HCoeff(1)), s.gen(bt1g::z0), s.constant(HCoeff(1)),
                                s.gen(bt1g::z1), s.gen(bt1g::cxw), s.gen(bt1g::cw),
                                BT1Elem{}, s.constant(HCoeff::e(2)), s.gen(bt1g::cw), s.gen(bt1g::cxw)};
  }();
  return hom(s, x, im, [&](const HCoeff& c) { return s.constant(c); });
}

namespace {
BT2Elem bt1_to_bt2(const BT1Elem& x, const std::vector<BT2Elem>& im) {
  const auto& r = bt2();
  return hom(r, x, im, [&](const HCoeff& c) { return r.constant(c); });
}
}  // namespace

BT2Elem pi1_star(const BT1Elem& x) {
  static const std::vector<BT2Elem> im{M({{fg::z00, 1}, {fg::z01, 1}}), M({{fg::z10, 1}, {fg::z11, 1}}),
                                       G(fg::cxw1), G(fg::cw1)};
  return bt1_to_bt2(x, im);
}

BT2Elem pi2_star(const BT1Elem& x) {
  static const std::vector<BT2Elem> im{M({{fg::z00, 1}, {fg::z10, 1}}), M({{fg::z01, 1}, {fg::z11, 1}}),
                                       G(fg::cxw2), G(fg::cw2)};
  return bt1_to_bt2(x, im);
}

BT2Elem pullback_bt2(const std::string& name, const BT2Elem& x) {
  if (name == "delta") return delta_star(x);
  if (name == "chi1") return chi1_star(x);
  if (name == "gamma") return gamma_star(x);
  throw std::invalid_argument("unknown map " + name);
}

// ---- BU(2) --------------------------------------------------------------------

BU2Poly bu2_add(const BU2Poly& a, const BU2Poly& b) { return poly_add(HRing{}, a, b); }
BU2Poly bu2_sub(const BU2Poly& a, const BU2Poly& b) { return poly_sub(HRing{}, a, b); }
BU2Poly bu2_mul(const BU2Poly& a, const BU2Poly& b) { return poly_mul_raw(HRing{}, a, b); }
BU2Poly bu2_term(const HCoeff& c, const Monomial& m) {
  BU2Poly r;
  poly_add_term(HRing{}, r, m, c);
  return r;
}
BU2Poly bu2_gen(int slot) { return bu2_term(HCoeff(1), Monomial::var(slot)); }
std::string bu2_str(const BU2Poly& x) { return poly_str(HRing{}, *bu2_generators(), x); }

GradingBT2 bu2_grading(const BU2Poly& x) {
  std::optional<GradingBT2> g;
  for (const auto& [m, c] : x) {
    auto cg = HRing{}.grading(c);
    if (!cg) continue;
    GradingBT2 t = *cg + bu2_generators()->grading(m);
    if (g && *g != t) throw GradingMismatch("inhomogeneous element " + bu2_str(x));
    g = t;
  }
  return g.value_or(GradingBT2::ro2(0, 0));
}

bool bu2_equal(const BU2Element& a, const BU2Element& b) {
  BU2Poly d = bu2_sub(a.poly, b.poly);
  if (d.empty()) return true;
  GradingBT2 g = bu2_grading(d);
  if (!is_even(g)) throw UndecidableError("BU(2) equality is only decided in even gradings, got " + g.str());
  return bt2().sub(a.image, b.image).empty();
}

BU2Poly bu2_dual_chi_lambda() {
  // -(1 - kappa)(1 - u[1] Z0 Z2 cL) cxL
  BU2Poly one_k = bu2_term(HCoeff(1) - HCoeff::kappa(), {});
  BU2Poly eps = bu2_term(HCoeff::u(1), Monomial::var(bu2g::Z0) * Monomial::var(bu2g::Z2) * Monomial::var(bu2g::cL));
  BU2Poly f = bu2_mul(one_k, bu2_sub(bu2_term(HCoeff(1), {}), eps));
  return bu2_mul(bu2_term(HCoeff(-1), {}), bu2_mul(f, bu2_gen(bu2g::cxL)));
}

// ---- pushforward ------------------------------------------------------------

std::array<BT2Elem, 4> bu2_module_generators() {
  return {bt2().one(), mul({G(fg::z01), dual_generator(fg::cw1)}), mul({G(fg::z10), dual_generator(fg::cxw1)}),
          mul({dual_generator(fg::cw1), dual_generator(fg::cxw1)})};
}

std::array<BU2Poly, 4> pushforward_values() {
  return {bu2_term(HCoeff::u(1), Monomial::var(bu2g::Z0) * Monomial::var(bu2g::Z2)), bu2_gen(bu2g::Z2),
          bu2_gen(bu2g::Z0), bu2_dual_chi_lambda()};
}

BT2Elem expand(const DecomposedOverBU2& x) {
  auto g = bu2_module_generators();
  BT2Elem out;
  for (int i = 0; i < 4; ++i) out = bt2().add(out, bt2().mul(sstar(x.a[i]), g[i]));
  return out;
}

BU2Poly pushforward(const DecomposedOverBU2& x) {
  auto v = pushforward_values();
  BU2Poly out;
  for (int i = 0; i < 4; ++i) out = bu2_add(out, bu2_mul(x.a[i], v[i]));
  return out;
}

namespace {

using HP = Poly<HCoeff>;

// s^0_! and s^2_!: division rule in the dual roots, then the Z1^-1 correction.
HP fixed_component_push(const HP& p) {
  const auto& t = eta_target();
  HP hat;  // x -> -xh
  for (const auto& [m, c] : p) {
    Int sign = ((m[tg::x1] + m[tg::x2]) % 2 == 0) ? 1 : -1;
    poly_add_term(t.ring, hat, m, c * HCoeff(sign));
  }
  HP pushed = ne_pushforward(t.ring, hat, tg::x1, tg::x2);
  HP c1 = t.neg(t.add(t.var(tg::x1), t.var(tg::x2)));
  HP c2 = t.mul(t.var(tg::x1), t.var(tg::x2));
  HP out;
  for (const auto& [m, c] : pushed) {
    Monomial z = m;
    int a = z[tg::x1], b = z[tg::x2];
    z[tg::x1] = 0;
    z[tg::x2] = 0;
    z[tg::z01] -= 1;
    z[tg::z10] -= 1;
    HP term = t.term(c, z);
    for (int i = 0; i < a; ++i) term = t.mul(term, c1);
    for (int i = 0; i < b; ++i) term = t.mul(term, c2);
    out = t.add(out, term);
  }
  return out;
}

// Classes on B^1 = BT^2 evaluated at a fixed component of T^1.
struct B1Point {
  HP X1, X2, Z0, Z2, Z0inv, Z2inv, w;
};

struct T1Decomposition {
  std::function<HP(const B1Point&)> A, B;
};

HP hc(const HCoeff& c) { return eta_target().term(c, {}); }

std::array<T1Decomposition, 4> t1_decompositions() {
  const auto& t = eta_target();
  auto h = hc;
  return {{
      {[&t](const B1Point&) { return t.one(); }, [](const B1Point&) { return HP{}; }},
      {[](const B1Point&) { return HP{}; }, [](const B1Point& p) { return p.Z0inv; }},
      {[&t, h](const B1Point& p) { return t.mul(p.Z2inv, h(HCoeff::e(2))); },
       [&t, h](const B1Point& p) { return t.mul(p.Z2inv, h(HCoeff(1) - HCoeff::kappa())); }},
      {[&t, h](const B1Point& p) {
         return t.sub(t.mul(h(HCoeff::e(2)), p.X1), t.mul(h(HCoeff::xi()), t.mul(p.X1, p.X2)));
       },
       [&t, h](const B1Point& p) { return t.add(t.mul(h(HCoeff(1) - HCoeff::kappa()), p.X1), p.X2); }},
  }};
}

}  // namespace

std::vector<ComponentCheck> check_component_pushforwards() {
  const auto& t = eta_target();
  const char* names[4] = {"1", "z01*cw1^", "z10*cxw1^", "cw1^*cxw1^"};
  auto gens = bu2_module_generators();
  auto vals = pushforward_values();
  auto decs = t1_decompositions();
  BT2Elem w = mul({G(fg::z00), G(fg::z01), dual_generator(fg::cw1)});
  auto point = [&](int c, bool swapped) {
    B1Point p;
    HP xh1 = t.neg(t.var(tg::x1)), xh2 = t.neg(t.var(tg::x2));
    p.X1 = swapped ? xh2 : xh1;
    p.X2 = swapped ? xh1 : xh2;
    p.Z0 = t.var(tg::z00);
    p.Z2 = t.var(tg::z11);
    p.Z0inv = t.var(tg::z00, -1);
    p.Z2inv = t.var(tg::z11, -1);
    p.w = eta(c, w);
    return p;
  };
  B1Point p01 = point(tg::z01, false), p10 = point(tg::z10, true);
  std::vector<ComponentCheck> out;
  for (int i = 0; i < 4; ++i) {
    ComponentCheck r;
    r.generator = names[i];
    BT2Elem image = sstar(vals[i]);
    for (int c : {tg::z00, tg::z11}) {
      HP lhs = eta(c, image);
      HP rhs = fixed_component_push(eta(c, gens[i]));
      bool ok = t.sub(lhs, rhs).empty();
      (c == tg::z00 ? r.component0 : r.component2) = ok;
      if (!ok) r.detail.push_back("component " + std::to_string(c) + ": " + t.str(lhs) + " vs " + t.str(rhs));
    }
    r.decomposition = true;
    for (const B1Point* p : {&p01, &p10}) {
      int c = (p == &p01) ? tg::z01 : tg::z10;
      HP lhs = eta(c, gens[i]);
      HP rhs = t.add(decs[i].A(*p), t.mul(decs[i].B(*p), p->w));
      if (!t.sub(lhs, rhs).empty()) {
        r.decomposition = false;
        r.detail.push_back("T1 decomposition at " + std::to_string(c) + ": " + t.str(lhs) + " vs " + t.str(rhs));
      }
    }
    HP u1 = t.term(HCoeff::u(1), {});
    HP z0z2 = t.mul(p01.Z0, p01.Z2);
    HP pushed = t.add(t.mul(decs[i].A(p01), t.mul(u1, z0z2)), t.mul(decs[i].B(p01), z0z2));
    HP lhs = eta(tg::z01, image);
    r.component1 = t.sub(lhs, pushed).empty();
    if (!r.component1) r.detail.push_back("component 1: " + t.str(lhs) + " vs " + t.str(pushed));
    out.push_back(r);
  }
  return out;
}

// ---- mod N ------------------------------------------------------------------

BT2Model<Mod2Ring>::Elem mod_n_raw(const BT2Elem& x) {
  return map_coeffs(Mod2Ring{}, x, [](const HCoeff& c) { return h_mod_n(c); });
}

BT2Model<Mod2Ring>::Elem mod_n(const BT2Elem& x) { return bt2_mod_n().normalize(mod_n_raw(x)); }

}  // namespace eqc
