// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include "equicohom/classes.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace eqc {

namespace {

const BT2& R() { return bt2(); }
BT2Elem H(const HCoeff& c) { return R().constant(c); }
BT2Elem G(int slot) { return R().gen(slot); }
BT2Elem M(std::initializer_list<std::pair<int, int>> exps) {
  Monomial m;
  for (auto [i, k] : exps) m[i] += k;
  return R().mono(m);
}

std::array<BT2Elem, 5> unit_basis() {
  return {R().one(), H(HCoeff::g()), epsilon1(), epsilon2(), epsilon_oplus()};
}

}  // namespace

// Integer determinant by fraction-free elimination.
Int bareiss_det(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j])) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BT2Elem from_unit5(const Unit5& u) {
  auto b = unit_basis();
  BT2Elem r;
  for (int i = 0; i < 5; ++i) r = R().add(r, R().mul(R().integer(u[i]), b[i]));
  return r;
}

Unit5 to_unit5(const BT2Elem& x) {
  // The normal form of a + b g + c eps1 + d eps2 + f eps_oplus has constant
  // term (a + 2b) - b kappa and coefficient u[1] or u[2] on the eps monomials.
  Unit5 r{};
  auto b = unit_basis();
  BT2Elem rest = x;
  auto cst = rest.find(Monomial{});
  if (cst != rest.end()) {
    Int p = 0, q = 0;
    for (const auto& [m, c] : cst->second.terms()) {
      if (m.kind == HMono::Kind::Ex && m.p == 0 && m.q == 0) p = c;
      else if (m.kind == HMono::Kind::Kappa) q = c;
      else throw std::domain_error("not in the grading-0 unit span: " + R().str(x));
    }
    r[1] = -q;
    r[0] = p - 2 * r[1];
  }
  for (int i = 2; i < 5; ++i) {
    const auto& [m, c] = *b[i].begin();
    auto it = rest.find(m);
    if (it == rest.end()) continue;
    const auto& have = it->second.terms();
    const auto& unit = c.terms();
    if (have.size() != 1 || unit.size() != 1 || have.begin()->first != unit.begin()->first)
      throw std::domain_error("not in the grading-0 unit span: " + R().str(x));
    r[i] = have.begin()->second / unit.begin()->second;
  }
  if (!R().sub(from_unit5(r), x).empty()) throw std::domain_error("not in the grading-0 unit span: " + R().str(x));
  return r;
}

UnitReport unit_check(Int box) {
  UnitReport rep;
  auto b = unit_basis();
  const auto& r = R();
  auto expect = [&](const std::string& what, const BT2Elem& lhs, const BT2Elem& rhs) {
    if (!r.sub(lhs, rhs).empty()) rep.table_failures.push_back(what + ": " + r.str(lhs) + " != " + r.str(rhs));
  };
  BT2Elem g = b[1], e1 = b[2], e2 = b[3], eo = b[4];
  expect("g^2", r.mul(g, g), r.mul(r.integer(2), g));
  for (int i = 2; i < 5; ++i) {
    expect("g*eps", r.mul(g, b[i]), {});
    expect("eps^2", r.mul(b[i], b[i]), r.mul(r.integer(2), b[i]));
  }
  expect("eps1*eps2", r.mul(e1, e2), r.mul(r.integer(2), eo));
  expect("eps1*eps_oplus", r.mul(e1, eo), r.mul(r.integer(2), eo));
  expect("eps2*eps_oplus", r.mul(e2, eo), r.mul(r.integer(2), eo));

  std::array<BT2Elem, 4> factors{r.sub(r.one(), H(HCoeff::kappa())), r.sub(r.one(), e1), r.sub(r.one(), e2),
                                 r.sub(r.one(), eo)};
  std::set<Unit5> products;
  for (int mask = 0; mask < 16; ++mask) {
    BT2Elem p = r.one();
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) p = r.mul(p, factors[i]);
    if (r.sub(r.mul(p, p), r.one()).empty()) ++rep.squares_to_one;
    Unit5 c = to_unit5(p);
    products.insert(c);
    for (auto& v : c) v = -v;
    products.insert(c);
  }

  // Multiplication by u is the matrix sum u_i L_i; u is a unit iff det = +-1.
  std::array<std::array<Unit5, 5>, 5> table;  // table[i][j] = coords of b_i b_j
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) table[i][j] = to_unit5(r.mul(b[i], b[j]));
  Unit5 u;
  std::function<void(int)> rec = [&](int k) {
    if (k == 5) {
      std::vector<std::vector<Int>> mat(5, std::vector<Int>(5, 0));
      for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 5; ++i)
          for (int row = 0; row < 5; ++row) mat[row][j] += u[i] * table[i][j][row];
      Int d = bareiss_det(mat);
      if (d == 1 || d == -1) rep.units.push_back(u);
      return;
    }
    for (Int v = -box; v <= box; ++v) {
      u[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  rep.units_match_products = std::set<Unit5>(rep.units.begin(), rep.units.end()) == products;
  return rep;
}

BT2Elem dual_class(const std::string& name) {
  auto i = flat_generators()->index(name);
  if (!i || *i < fg::cxw1) throw std::invalid_argument("no dual class for " + name);
  return dual_generator(*i);
}

BT1Elem q_bt1() {
  const auto& s = *bt1_system();
  BT1Elem eps = s.term(HCoeff::u(1), Monomial::var(bt1g::z0) * Monomial::var(bt1g::cw));
  BT1Elem one_eps = s.sub(s.constant(HCoeff(1)), eps);
  BT1Elem cw_hat = s.neg(s.mul(one_eps, s.gen(bt1g::cw)));
  BT1Elem cxw_hat = s.neg(s.mul(s.constant(HCoeff(1) - HCoeff::kappa()), s.mul(one_eps, s.gen(bt1g::cxw))));
  BT1Elem inner = s.add(s.term(HCoeff::t(2), Monomial::var(bt1g::z0)), s.mul(s.constant(HCoeff::u(1)), cxw_hat));
  return s.mul(cw_hat, inner);
}

BT2Elem q1() {
  BT2Elem inner = R().add(R().mul(H(HCoeff::t(2)), M({{fg::z00, 1}, {fg::z01, 1}})),
                          R().mul(H(HCoeff::u(1)), dual_generator(fg::cxw1)));
  return R().mul(dual_generator(fg::cw1), inner);
}

BT2Elem q2() {
  BT2Elem inner = R().add(R().mul(H(HCoeff::t(2)), M({{fg::z00, 1}, {fg::z10, 1}})),
                          R().mul(H(HCoeff::u(1)), dual_generator(fg::cxw2)));
  return R().mul(dual_generator(fg::cw2), inner);
}

BT2Elem euler_zeta1(Int m, Int n, bool twisted) {
  bool mo = mod_pos(m, 2) == 1, no = mod_pos(n, 2) == 1;
  if (!twisted) {
    if (!mo && !no) return R().one();
    if (mo && !no) return M({{fg::z10, 1}, {fg::z11, 1}});
    if (!mo && no) return M({{fg::z01, 1}, {fg::z11, 1}});
    return M({{fg::z01, 1}, {fg::z10, 1}});
  }
  if (!mo && !no) return H(HCoeff::xi());
  if (mo && !no) return M({{fg::z00, 1}, {fg::z01, 1}});
  if (!mo && no) return M({{fg::z00, 1}, {fg::z10, 1}});
  return M({{fg::z00, 1}, {fg::z11, 1}});
}

BT2Elem euler_omn(Int m, Int n, bool twisted) {
  Int k = floor_div(m, 2), l = floor_div(n, 2);
  bool mo = m - 2 * k == 1, no = n - 2 * l == 1;
  BT2Elem even = R().add(R().mul(R().integer(k), q1()), R().mul(R().integer(l), q2()));
  BT2Elem base;
  if (!twisted) {
    if (mo && !no) base = dual_generator(fg::cw1);
    if (!mo && no) base = dual_generator(fg::cw2);
    if (mo && no) base = dual_generator(fg::cT);
  } else {
    if (!mo && !no) base = H(HCoeff::e(2));
    if (mo && !no) base = dual_generator(fg::cxw1);
    if (!mo && no) base = dual_generator(fg::cxw2);
    if (mo && no) base = dual_generator(fg::cxT);
  }
  return euler_tensor_fixed(base, euler_zeta1(m, n, twisted), even);
}

BT2Elem euler_tensor_fixed(const BT2Elem& e_omega, const BT2Elem& zeta1, const BT2Elem& e_mu) {
  return R().add(e_omega, R().mul(zeta1, e_mu));
}

LineBundle line_bundle(const std::string& name) {
  if (name == "1") return {name, R().one(), {}};
  if (name == "w1") return {name, M({{fg::z10, 1}, {fg::z11, 1}}), G(fg::cw1)};
  if (name == "xw1") return {name, M({{fg::z00, 1}, {fg::z01, 1}}), G(fg::cxw1)};
  if (name == "w2") return {name, M({{fg::z01, 1}, {fg::z11, 1}}), G(fg::cw2)};
  if (name == "xw2") return {name, M({{fg::z00, 1}, {fg::z10, 1}}), G(fg::cxw2)};
  if (name == "T") return {name, M({{fg::z01, 1}, {fg::z10, 1}}), G(fg::cT)};
  if (name == "xT") return {name, M({{fg::z00, 1}, {fg::z11, 1}}), G(fg::cxT)};
  throw std::invalid_argument("unknown line bundle " + name);
}

std::vector<std::string> line_bundle_names() { return {"1", "w1", "xw1", "w2", "xw2", "T", "xT"}; }

bool WanerClass::operator==(const WanerClass& o) const {
  if (coeffs.size() != o.coeffs.size()) return false;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!R().sub(coeffs[i], o.coeffs[i]).empty()) return false;
  return true;
}

std::string WanerClass::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].empty()) continue;
    if (!out.empty()) out += " + ";
    std::string c = R().str(coeffs[i]);
    if (i == 0) {
      out += c;
      continue;
    }
    out += (coeffs[i].size() > 1 ? "(" + c + ")" : c) + "*t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

WanerClass waner_product(const WanerClass& a, const WanerClass& b) {
  WanerClass r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BT2Elem{});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = R().add(r.coeffs[i + j], R().mul(a.coeffs[i], b.coeffs[j]));
  return r;
}

WanerClass waner_total(const std::vector<LineBundle>& bundles) {
  if (bundles.empty()) throw std::invalid_argument("waner_total needs at least one line bundle");
  WanerClass w{{R().one()}};
  for (const auto& lb : bundles) w = waner_product(w, WanerClass{{lb.zeta, lb.euler}});
  return w;
}

}  // namespace eqc
