// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include "equicohom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "equicohom/classes.hpp"
#include "equicohom/expr.hpp"

namespace eqc {

namespace {

// Criteria that fail for documented reasons.
const std::set<int>& documented_unattainable() {
  static const std::set<int> ids{1};
  return ids;
}

struct Checker {
  CriterionResult& r;
  int total = 0;
  int failed = 0;

  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok) {
      ++failed;
      r.notes.push_back("failed: " + what);
    }
  }
  // Runs f; an exception counts as one failed check.
  void guard(const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++total;
      ++failed;
      r.notes.push_back("error in " + what + ": " + e.what());
    }
  }
  void note(const std::string& s) { r.notes.push_back(s); }
  bool ok() const { return failed == 0; }
  std::string tally() const { return std::to_string(total - failed) + "/" + std::to_string(total) + " checks"; }
};

const BT2& R() { return bt2(); }
BT2Elem P(const std::string& s) { return parse_bt2(s); }
BT2Elem S(const std::string& s) { return sstar(parse_bu2(s)); }
bool eq(const BT2Elem& a, const BT2Elem& b) { return R().sub(a, b).empty(); }

// Unnormalized monomial.
BT2Elem raw_mono(std::initializer_list<std::pair<int, int>> exps) {
  Monomial m;
  for (auto [i, k] : exps) m[i] += k;
  BT2Elem r;
  poly_add_term(HRing{}, r, m, HCoeff(1));
  return r;
}

// Substitution without normalization.
BT2Elem raw_sub(const BT2Elem& x, const std::vector<BT2Elem>& im) {
  return apply_hom(
      x, im, [](const BT2Elem& a, const BT2Elem& b) { return poly_mul_raw(HRing{}, a, b); },
      [](const BT2Elem& a, const BT2Elem& b) { return poly_add(HRing{}, a, b); },
      [](const HCoeff& c) {
        BT2Elem r;
        poly_add_term(HRing{}, r, Monomial{}, c);
        return r;
      });
}

const Relation& relation(const std::string& name) {
  static const std::vector<Relation> rels = bt2_relations();
  for (const auto& r : rels)
    if (r.name == name) return r;
  throw std::logic_error("no relation " + name);
}

// Keeps only the x1, x2 exponents (fixed-set units e, zeta set to 1).
Poly<Int> units_to_one(const Poly<Int>& p) {
  Poly<Int> r;
  for (const auto& [m, c] : p) {
    Monomial n;
    n[tg::x1] = m[tg::x1];
    n[tg::x2] = m[tg::x2];
    poly_add_term(IntRing{}, r, n, c);
  }
  return r;
}

// Splits p = u * q with u a zeta/unit monomial shared by all terms.
bool split_unit(const Poly<Int>& p, Monomial& unit, Poly<Int>& xpart) {
  bool first = true;
  xpart.clear();
  for (const auto& [m, c] : p) {
    Monomial u = m, x;
    u[tg::x1] = 0;
    u[tg::x2] = 0;
    x[tg::x1] = m[tg::x1];
    x[tg::x2] = m[tg::x2];
    if (first) unit = u;
    else if (!(u == unit)) return false;
    first = false;
    poly_add_term(IntRing{}, xpart, x, c);
  }
  return true;
}

Poly<HCoeff> negate_x(const Poly<HCoeff>& p) {
  Poly<HCoeff> r;
  for (const auto& [m, c] : p) poly_add_term(HRing{}, r, m, ((m[tg::x1] + m[tg::x2]) % 2 == 0) ? c : -c);
  return r;
}

std::string cell_str(Int a, Int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// ---- 1 ------------------------------------------------------------------------

CriterionResult criterion1() {
  CriterionResult r{1, "confluence of the rewriting systems", false, false, {}};
  Checker ck{r};
  ck.guard("BT1 confluence", [&] {
    auto rep = bt1_system()->check_confluence();
    ck.expect(rep.pass(), "(a) BT1 overlaps join");
    ck.note("(a) BT1: " + std::to_string(rep.pairs.size()) + " overlaps, " + (rep.pass() ? "all joined" : "not all joined"));
  });
  ck.guard("two-level confluence", [&] {
    const auto& two = *bt2_two_level();
    auto rep = two.check_confluence();
    ck.expect(rep.pass(), "(b) two-level overlaps join");
    std::size_t joined = std::count_if(rep.pairs.begin(), rep.pairs.end(), [](const auto& p) { return p.joined; });
    ck.note("(b) two-level BT2: " + std::to_string(joined) + "/" + std::to_string(rep.pairs.size()) + " overlaps joined");
    for (const auto& p : rep.pairs)
      if (!p.joined) ck.note("    unjoined " + p.rule_i + "," + p.rule_j + " at " + two.gens().str(p.lcm));
    auto find = [&](const std::string& a, const std::string& b) -> const TwoLevelSystem::OverlapResult* {
      for (const auto& p : rep.pairs)
        if (p.rule_i == a && p.rule_j == b) return &p;
      return nullptr;
    };
    const auto* r13 = find("R1", "R3");
    ck.expect(r13 && R().flatten(r13->nf_i) == P("z00*z01*z11*cxw2"), "(b) (R1,R3) joins at z00*z01*z11*cxw2");
    ck.note("(b) (R1,R3) joins at z0*z11*cxw2 (the printed value has cw2 in place of cxw2)");
    const auto* r812 = find("R8", "R12");
    ck.expect(r812 && R().flatten(r812->nf_i) ==
                          P("cw1*cxw1*z00 + z00*cw2*cxw2 + (2-kappa)*(1-u[1]*z00*z01*cw1)*cxw1*z11*cxw2"),
              "(b) (R8,R12) joining value");
  });
  const bool ab_ok = ck.ok();

  bool c_ok = false;
  ck.guard("flat system", [&] {
    GradingBT2 g = parse_grading("2 + 2*W00 + W01 + W11");
    Window w{0, 0, 0, 0};
    auto count = [](const std::vector<BasisCell>& cells) {
      std::size_t n = 0;
      for (const auto& c : cells) n += c.monomials.size();
      return n;
    };
    std::size_t flat = count(flat_exclusion_enumerate(g, w));
    std::size_t prod = count(basis_enumerate(g, w));
    ck.note("(c) grading 2+2W00+W01+W11: flat exclusion list admits " + std::to_string(flat) +
            " monomial(s), the confluent product basis has " + std::to_string(prod));
    BT2Elem a = P("z01*cxT"), b = P("z00^2*cw2");
    Monomial ma = Monomial::var(fg::z00) * Monomial::var(fg::cw2);
    Monomial mb = Monomial::var(fg::z00) * Monomial::var(fg::z01) * Monomial::var(fg::cxT);
    Monomial la = Monomial::var(fg::z01) * Monomial::var(fg::cxT);
    Monomial lb = Monomial::var(fg::z00, 2) * Monomial::var(fg::cw2);
    bool cycle = a.count(ma) && b.count(mb) && la * lb == ma * mb;
    if (cycle)
      ck.note("(c) z01*cxT reduces through z00*cw2 and z00^2*cw2 through z00*z01*cxT; "
              "no monomial order makes both flat rules decreasing");
    c_ok = flat == prod && !cycle;
  });
  if (!c_ok) r.notes.push_back("failed: (c) the 13-rule flat system cannot be derived (documented)");
  r.pass = ab_ok && c_ok;
  r.known_unattainable = ab_ok && !c_ok;
  return r;
}

// ---- 2 ------------------------------------------------------------------------

CriterionResult criterion2() {
  CriterionResult r{2, "relations vanish in both models and under eta, rho, phi", false, false, {}};
  Checker ck{r};
  for (const auto& rel : bt2_relations()) {
    ck.guard(rel.name, [&] {
      BT2Elem d = R().sub(rel.lhs, rel.rhs);
      ck.expect(R().normalize(d).empty(), rel.name + " in the flat model");
      ck.expect(bt2_two_level()->reduce(R().unflatten(d)).empty(), rel.name + " in the two-level model");
      for (int c = 0; c < 4; ++c) ck.expect(eta(c, d).empty(), rel.name + " under eta_" + std::to_string(c));
      ck.expect(rho(d).empty(), rel.name + " under rho");
      auto f = phi(d);
      ck.expect(std::all_of(f.begin(), f.end(), [](const auto& x) { return x.empty(); }), rel.name + " under phi");
    });
  }
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 3 ------------------------------------------------------------------------

struct ListRow {
  const char* mono;
  Int a, b;
  std::array<const char*, 4> fixed;
};

void check_list(Checker& ck, const std::string& coset_text, const std::vector<ListRow>& rows) {
  GradingBT2 coset = parse_grading(coset_text);
  std::map<Monomial, std::pair<Int, Int>> enumerated;
  for (const auto& c : basis_enumerate(coset, {0, 2, 0, 12}))
    for (const auto& m : c.monomials) enumerated[m] = {c.cell.a, c.cell.b};
  ck.expect(enumerated.size() == rows.size(), coset_text + " list has " + std::to_string(rows.size()) +
                                                  " entries, basis has " + std::to_string(enumerated.size()));
  for (const auto& row : rows) {
    ck.guard(row.mono, [&] {
      BT2Elem x = P(row.mono);
      bool mono = x.size() == 1 && x.begin()->second == HCoeff(1);
      ck.expect(mono, std::string(row.mono) + " is a normal monomial");
      if (!mono) return;
      const Monomial& m = x.begin()->first;
      auto it = enumerated.find(m);
      ck.expect(it != enumerated.end() && it->second == std::make_pair(row.a, row.b),
                std::string(row.mono) + " at cell " + cell_str(row.a, row.b));
      auto f = phi(x);
      for (int c = 0; c < 4; ++c)
        ck.expect(units_to_one(f[c]) == units_to_one(parse_target(row.fixed[c], phi_target())),
                  std::string(row.mono) + " fixed set component " + std::to_string(c));
    });
  }
}

CriterionResult criterion3() {
  CriterionResult r{3, "basis grids and element lists", false, false, {}};
  Checker ck{r};
  using Grid = std::map<std::pair<Int, Int>, Int>;
  const Grid g0{{{0, 0}, 1}, {{0, 2}, 2}, {{0, 4}, 1}, {{2, 2}, 2}, {{2, 4}, 4},  {{2, 6}, 2},
                {{4, 4}, 3}, {{4, 6}, 6}, {{4, 8}, 3}, {{6, 6}, 4}, {{6, 8}, 8}, {{6, 10}, 4}};
  const Grid g1{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 0}, 1}, {{2, 2}, 3}, {{2, 4}, 2}, {{4, 2}, 2},
                {{4, 4}, 5}, {{4, 6}, 3}, {{6, 4}, 3}, {{6, 6}, 7}, {{6, 8}, 4}};
  for (const auto& [text, expected] : {std::pair{"0", g0}, std::pair{"W01+W10", g1}}) {
    ck.guard(std::string("grid ") + text, [&, text = text, expected = expected] {
      Grid got;
      for (const auto& [ab, n] : basis_count_grid(parse_grading(text), {0, 6, 0, 10}))
        if (n) got[ab] = n;
      ck.expect(got == expected, std::string("grid for coset ") + text);
      ck.note(std::string("coset ") + text + ": " + std::to_string(got.size()) + " nonzero cells, expected " +
              std::to_string(expected.size()));
      for (const auto& [ab, n] : expected) {
        auto it = got.find(ab);
        Int have = it == got.end() ? 0 : it->second;
        if (have != n)
          ck.note("    cell " + cell_str(ab.first, ab.second) + ": " + std::to_string(have) + " vs " + std::to_string(n));
      }
    });
  }
  check_list(ck, "0",
             {
                 {"1", 0, 0, {"1", "1", "1", "1"}},
                 {"z00*z01*cw1", 0, 2, {"0", "0", "1", "1"}},
                 {"z00*z10*cw2", 0, 2, {"0", "1", "0", "1"}},
                 {"z00^2*z01*z10*cw1*cw2", 0, 4, {"0", "0", "0", "1"}},
                 {"cw1*cxw1", 2, 2, {"x1", "x1", "x1", "x1"}},
                 {"cw2*cxw2", 2, 2, {"x2", "x2", "x2", "x2"}},
                 {"z00*z01*cw1^2*cxw1", 2, 4, {"0", "0", "x1", "x1"}},
                 {"z00*z10*cw1*cxw1*cw2", 2, 4, {"0", "x1", "0", "x1"}},
                 {"z00*z01*cw1*cw2*cxw2", 2, 4, {"0", "0", "x2", "x2"}},
                 {"z00*z10*cw2^2*cxw2", 2, 4, {"0", "x2", "0", "x2"}},
                 {"z00^2*z01*z10*cw1^2*cxw1*cw2", 2, 6, {"0", "0", "0", "x1"}},
                 {"z00^2*z01*z10*cw1*cw2^2*cxw2", 2, 6, {"0", "0", "0", "x2"}},
             });
  check_list(ck, "W01+W10",
             {
                 {"z01*z10", 0, 0, {"1", "0", "0", "1"}},
                 {"z00*z01^2*z10*cw1", 0, 2, {"0", "0", "0", "1"}},
                 {"cT", 2, 0, {"x1+x2", "1", "1", "x1+x2"}},
                 {"z01*z10*cw1*cxw1", 2, 2, {"x1", "0", "0", "x1"}},
                 {"z01*z10*cw2*cxw2", 2, 2, {"x2", "0", "0", "x2"}},
                 {"z00*z01*cw1*cT", 2, 2, {"0", "0", "1", "x1+x2"}},
                 {"z00*z01^2*z10*cw1^2*cxw1", 2, 4, {"0", "0", "0", "x1"}},
                 {"z00*z01^2*z10*cw1*cw2*cxw2", 2, 4, {"0", "0", "0", "x2"}},
             });
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 4 ------------------------------------------------------------------------

CriterionResult criterion4() {
  CriterionResult r{4, "rho base change", false, false, {}};
  Checker ck{r};
  const std::vector<std::pair<const char*, const char*>> rels{
      {"z00*z01*z10*z11", "iota^2"},
      {"z10*z11*cxw1", "z00*z01*cw1"},
      {"z01*z11*cxw2", "z00*z10*cw2"},
      {"z00*cT", "z10*cxw1 + z01*cxw2"},
      {"z11*cT", "z01*cw1 + z10*cw2"},
      {"z01*cxT", "z11*cxw1 + z00*cw2"},
      {"z10*cxT", "z00*cw1 + z11*cxw2"},
      {"cT*cxT", "cw1*cxw1 + cw2*cxw2 + 2*iota^-2*z00^2*z01*z10*cw1*cw2"},
  };
  const auto& B = bt2_rho();
  for (const auto& [l, rhs] : rels) {
    ck.guard(l, [&, l = l, rhs = rhs] {
      PhiElem d = B.sub(parse_bt2_rho(l), parse_bt2_rho(rhs));
      ck.expect(d.empty(), std::string(l) + " = " + rhs + " after base change");
      ck.expect(rho_target().sub(rho_base(parse_bt2_rho(l)), rho_base(parse_bt2_rho(rhs))).empty(),
                std::string(l) + " = " + rhs + " in the nonequivariant target");
    });
  }
  std::size_t matrices = 0;
  for (const char* text : {"0", "W01+W10", "W00", "W00+W01", "W01-W10", "2*W00-W11"}) {
    GradingBT2 coset = parse_grading(text);
    for (Int d = 0; d <= 8; d += 2) {
      ck.guard(std::string("coset ") + text, [&] {
        auto ms = basis_by_rho_degree(coset, d);
        const Int k = d / 2;
        std::string where = std::string("coset ") + text + ", rho-degree " + std::to_string(d);
        ck.expect(static_cast<Int>(ms.size()) == k + 1, where + ": " + std::to_string(ms.size()) + " basis monomials");
        if (static_cast<Int>(ms.size()) != k + 1) return;
        std::vector<std::vector<Int>> mat;
        for (const auto& m : ms) {
          Monomial unit;
          Poly<Int> xp;
          bool ok = split_unit(rho(R().mono(m)), unit, xp);
          ck.expect(ok && !xp.empty(), where + ": rho image of " + R().gens().str(m) + " is a unit times a form in x");
          std::vector<Int> row;
          for (Int i = 0; i <= k; ++i) {
            Monomial x = Monomial::var(tg::x1, static_cast<std::int32_t>(i)) *
                         Monomial::var(tg::x2, static_cast<std::int32_t>(k - i));
            auto it = xp.find(x);
            row.push_back(it == xp.end() ? 0 : it->second);
          }
          mat.push_back(row);
        }
        Int det = bareiss_det(mat);
        ck.expect(det == 1 || det == -1, where + ": determinant " + std::to_string(det));
        ++matrices;
      });
    }
  }
  ck.note("8 simplified relations; " + std::to_string(matrices) + " unimodular basis matrices (6 cosets, rho-degree <= 8)");
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 5 ------------------------------------------------------------------------

CriterionResult criterion5() {
  CriterionResult r{5, "fixed-point map and its inverse", false, false, {}};
  Checker ck{r};
  const auto& T = phi_target();
  const auto& B = bt2_phi();
  auto tuple = [&](const std::array<const char*, 4>& s) {
    TupleZ t;
    for (int c = 0; c < 4; ++c) t[c] = parse_target(s[c], T);
    return t;
  };
  const std::vector<std::pair<const char*, std::array<const char*, 4>>> gens{
      {"z00", {"0", "z00", "z00", "z00"}},
      {"z01", {"z01", "0", "z01", "z01"}},
      {"z10", {"z10", "z10", "0", "z10"}},
      {"z11", {"z11", "z11", "z11", "0"}},
      {"cw1", {"z10*z11*x1", "z10*z11*x1", "e^2*z00^-1*z01^-1", "e^2*z00^-1*z01^-1"}},
      {"cxw1", {"e^2*z10^-1*z11^-1", "e^2*z10^-1*z11^-1", "z00*z01*x1", "z00*z01*x1"}},
      {"cw2", {"z01*z11*x2", "e^2*z00^-1*z10^-1", "z01*z11*x2", "e^2*z00^-1*z10^-1"}},
      {"cxw2", {"e^2*z01^-1*z11^-1", "z00*z10*x2", "e^2*z01^-1*z11^-1", "z00*z10*x2"}},
      {"cT", {"z01*z10*(x1+x2)", "e^2*z00^-1*z11^-1", "e^2*z00^-1*z11^-1", "z01*z10*(x1+x2)"}},
      {"cxT", {"e^2*z01^-1*z10^-1", "z00*z11*(x1+x2)", "z00*z11*(x1+x2)", "e^2*z01^-1*z10^-1"}},
  };
  for (const auto& [g, vals] : gens) {
    ck.guard(g, [&, g = g, vals = vals] {
      PhiElem x = parse_bt2_phi(g);
      ck.expect(phi_bar(x) == tuple(vals), std::string("phi_bar(") + g + ")");
      ck.expect(B.sub(psi(phi_bar(x)), x).empty(), std::string("psi(phi_bar(") + g + ")) = " + g);
    });
  }
  const std::vector<std::pair<const char*, std::array<const char*, 4>>> rows{
      {"e^-2*cw1*cxw1", {"x1", "x1", "x1", "x1"}},
      {"e^-2*cw2*cxw2", {"x2", "x2", "x2", "x2"}},
      {"e^-4*z01*z10*z11^2*cxw1*cxw2", {"1", "0", "0", "0"}},
      {"e^-4*z00*z10^2*z11*cxw1*cw2", {"0", "1", "0", "0"}},
      {"e^-4*z00*z01^2*z11*cw1*cxw2", {"0", "0", "1", "0"}},
      {"e^-4*z00^2*z01*z10*cw1*cw2", {"0", "0", "0", "1"}},
      {"e^-4*z01*z10*z11*cxw2*cxT", {"z01^-1", "0", "0", "0"}},
      {"e^-4*z01*z10*z11*cxw1*cxT", {"z10^-1", "0", "0", "0"}},
      {"e^-4*z01*z10*z11*cxw1*cxw2", {"z11^-1", "0", "0", "0"}},
      {"e^-4*z00*z10*z11*cw2*cT", {"0", "z00^-1", "0", "0"}},
  };
  for (const auto& [x, vals] : rows) {
    ck.guard(x, [&, x = x, vals = vals] {
      ck.expect(phi_bar(parse_bt2_phi(x)) == tuple(vals), std::string("phi_bar(") + x + ")");
    });
  }
  ck.guard("psi rows", [&] {
    for (int c = 0; c < 4; ++c) {
      TupleZ t;
      t[c] = T.one();
      ck.expect(B.sub(psi(t), parse_bt2_phi(rows[2 + c].first)).empty(), "psi of idempotent " + std::to_string(c));
    }
    TupleZ one0{T.one(), {}, {}, {}};
    for (int z : {tg::z01, tg::z10, tg::z11}) {
      TupleZ t{T.var(z), {}, {}, {}};
      ck.expect(B.sub(psi(t), B.mul(B.gen(z), psi(one0))).empty(), "psi(zeta,0,0,0) = zeta psi(1,0,0,0)");
    }
    TupleZ inv{T.var(tg::z01, -1), {}, {}, {}};
    ck.expect(B.sub(psi(inv), parse_bt2_phi(rows[6].first)).empty(), "psi(z01^-1,0,0,0)");
    TupleZ x1{T.var(tg::x1), {}, {}, {}};
    ck.expect(B.sub(psi(x1), B.mul(parse_bt2_phi("e^-2*cw1*cxw1"), psi(one0))).empty(),
              "psi(x1,0,0,0) = e^-2 cw1 cxw1 psi(1,0,0,0)");
  });
  ck.guard("phi_bar after psi", [&] {
    for (int c = 0; c < 4; ++c) {
      std::vector<Poly<Int>> vals{T.one(), T.var(tg::x1), T.var(tg::x2), T.var(tg::unit, -1)};
      for (int z = tg::z00; z <= tg::z11; ++z) {
        if (z == c) continue;
        vals.push_back(T.var(z));
        vals.push_back(T.var(z, -1));
      }
      for (const auto& v : vals) {
        TupleZ t;
        t[c] = v;
        ck.expect(phi_bar(psi(t)) == t, "phi_bar(psi(" + T.str(v) + " at component " + std::to_string(c) + "))");
      }
    }
  });
  ck.note("10 generator values, 10 calculation rows, 8 psi rows, psi o phi_bar = id on 10 generators");
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 6 ------------------------------------------------------------------------

CriterionResult criterion6() {
  CriterionResult r{6, "units", false, false, {}};
  Checker ck{r};
  ck.guard("units", [&] {
    auto rep = unit_check(3);
    for (const auto& f : rep.table_failures) ck.note("    table: " + f);
    ck.expect(rep.table_failures.empty(), "multiplication table of {1, g, eps1, eps2, eps_oplus}");
    ck.expect(rep.squares_to_one == 16, std::to_string(rep.squares_to_one) + "/16 candidates square to 1");
    ck.expect(rep.units.size() == 32, std::to_string(rep.units.size()) + " units in [-3,3]^5");
    ck.expect(rep.units_match_products, "units are the signed products of the candidates");
    std::set<Unit5> set(rep.units.begin(), rep.units.end());
    bool closed = true;
    for (const auto& a : rep.units)
      for (const auto& b : rep.units)
        if (!set.count(to_unit5(R().mul(from_unit5(a), from_unit5(b))))) closed = false;
    ck.expect(closed, "units closed under multiplication");
    ck.note(std::to_string(rep.units.size()) + " units, " + std::to_string(rep.squares_to_one) + " squares to 1");
  });
  r.pass = ck.ok();
  return r;
}

// ---- 7 ------------------------------------------------------------------------

CriterionResult criterion7() {
  CriterionResult r{7, "dual classes", false, false, {}};
  Checker ck{r};
  for (int slot = fg::cxw1; slot <= fg::cT; ++slot) {
    const std::string name = R().gens().name(slot);
    ck.guard(name, [&] {
      BT2Elem d = dual_class(name), g = R().gen(slot);
      for (int c = 0; c < 4; ++c)
        ck.expect(eta(c, d) == negate_x(eta(c, g)), "eta_" + std::to_string(c) + " of dual " + name);
      ck.expect(rho(d) == rho_target().neg(rho(g)), "rho of dual " + name);
      ck.expect(eq(delta_star(d), g), "dual of dual " + name);
    });
  }
  ck.guard("cT first form", [&] {
    ck.expect(eq(dual_class("cT"), P("-(1 - u[1]*z00*z11*cT)*cT")), "dual cT = -(1 - u[1] z00 z11 cT) cT");
  });
  for (int slot = 0; slot < 10; ++slot)
    ck.expect(eq(delta_star(delta_star(R().gen(slot))), R().gen(slot)), "involution on " + R().gens().name(slot));
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 8 ------------------------------------------------------------------------

CriterionResult criterion8() {
  CriterionResult r{8, "Euler classes of O(m,n)", false, false, {}};
  Checker ck{r};
  ck.guard("Q", [&] {
    ck.expect(eq(q1(), euler_omn(2, 0, false)), "Q1 = e(O(2,0))");
    ck.expect(eq(q2(), euler_omn(0, 2, false)), "Q2 = e(O(0,2))");
    ck.expect(eq(pi1_star(q_bt1()), q1()), "pi1* Q = Q1");
    ck.expect(eq(pi2_star(q_bt1()), q2()), "pi2* Q = Q2");
  });
  std::atomic<int> recursion{0}, rho_ok{0};
  std::mutex mu;
  std::vector<std::tuple<Int, Int, bool>> cases;
  for (Int m = -3; m <= 3; ++m)
    for (Int n = -3; n <= 3; ++n)
      for (bool tw : {false, true}) cases.emplace_back(m, n, tw);
  std::vector<std::string> bad;
  parallel_for(cases.size(), [&](std::size_t i) {
    auto [m, n, tw] = cases[i];
    std::string label = std::string(tw ? "chi " : "") + "O(" + std::to_string(m) + "," + std::to_string(n) + ")";
    try {
      BT2Elem e = euler_omn(m, n, tw);
      for (Int k = -1; k <= 1; ++k)
        for (Int l = -1; l <= 1; ++l) {
          BT2Elem lhs = euler_omn(m + 2 * k, n + 2 * l, tw);
          BT2Elem rhs = euler_tensor_fixed(e, euler_zeta1(m, n, tw), euler_omn(2 * k, 2 * l, false));
          if (eq(lhs, rhs)) {
            ++recursion;
          } else {
            std::lock_guard<std::mutex> lock(mu);
            bad.push_back("recursion " + label + " + (" + std::to_string(2 * k) + "," + std::to_string(2 * l) + ")");
          }
        }
      Monomial unit;
      Poly<Int> xp;
      Poly<Int> expect;
      poly_add_term(IntRing{}, expect, Monomial::var(tg::x1), -m);
      poly_add_term(IntRing{}, expect, Monomial::var(tg::x2), -n);
      Poly<Int> img = rho(e);
      if ((expect.empty() && img.empty()) || (split_unit(img, unit, xp) && xp == expect)) {
        ++rho_ok;
      } else {
        std::lock_guard<std::mutex> lock(mu);
        bad.push_back("rho of e(" + label + ") = " + rho_target().str(img));
      }
    } catch (const std::exception& ex) {
      std::lock_guard<std::mutex> lock(mu);
      bad.push_back(label + ": " + ex.what());
    }
  });
  std::sort(bad.begin(), bad.end());
  for (const auto& b : bad) ck.expect(false, b);
  ck.note(std::to_string(recursion.load()) + "/" + std::to_string(cases.size() * 9) + " recursion instances, " +
          std::to_string(rho_ok.load()) + "/" + std::to_string(cases.size()) + " rho images -m x1 - n x2 up to a unit");
  r.pass = ck.ok() && bad.empty();
  return r;
}

// ---- 9 ------------------------------------------------------------------------

CriterionResult criterion9() {
  CriterionResult r{9, "relations from pullbacks", false, false, {}};
  Checker ck{r};
  using namespace fg;
  const std::vector<BT2Elem> chi1{raw_mono({{z10, 1}}), raw_mono({{z11, 1}}), raw_mono({{z00, 1}}),
                                  raw_mono({{z01, 1}}), raw_mono({{cw1, 1}}),  raw_mono({{cxw1, 1}}),
                                  raw_mono({{cxw2, 1}}), raw_mono({{cw2, 1}}), raw_mono({{cT, 1}}),
                                  raw_mono({{cxT, 1}})};
  const std::vector<BT2Elem> gamma{raw_mono({{z00, 1}}), raw_mono({{z10, 1}}), raw_mono({{z01, 1}}),
                                   raw_mono({{z11, 1}}), raw_mono({{cxw2, 1}}), raw_mono({{cw2, 1}}),
                                   raw_mono({{cxw1, 1}}), raw_mono({{cw1, 1}}), raw_mono({{cxT, 1}}),
                                   raw_mono({{cT, 1}})};
  auto same = [](const Relation& a, const Relation& b) { return a.lhs == b.lhs && a.rhs == b.rhs; };
  auto pull = [&](const Relation& a, const std::vector<BT2Elem>& im) {
    return Relation{a.name, raw_sub(a.lhs, im), raw_sub(a.rhs, im)};
  };
  ck.guard("chi1", [&] {
    const Relation& main = relation("z11*cT");
    Relation c = pull(main, chi1);
    ck.expect(same(c, relation("z01*cxT")), "chi1* of the z11*cT relation is the z01*cxT relation");
    Relation g = pull(c, gamma);
    ck.expect(same(g, relation("z10*cxT")), "gamma* of that is the z10*cxT relation");
    ck.expect(same(pull(g, chi1), relation("z00*cT")), "chi1* of that is the z00*cT relation");
    ck.expect(eq(chi1_star(main.lhs), chi1_star(main.rhs)), "chi1* respects the relation");
  });
  ck.guard("t", [&] {
    const auto& s = *bt1_system();
    auto bt1 = [&](std::initializer_list<std::pair<int, int>> e, const HCoeff& c = HCoeff(1)) {
      Monomial m;
      for (auto [i, k] : e) m[i] += k;
      BT1Elem x;
      poly_add_term(HRing{}, x, m, c);
      return x;
    };
    const std::vector<BT1Elem> t{bt1({}), bt1({{bt1g::z0, 1}}), bt1({}), bt1({{bt1g::z1, 1}}),
                                 bt1({{bt1g::cxw, 1}}), bt1({{bt1g::cw, 1}}), BT1Elem{},
                                 bt1({}, HCoeff::e(2)), bt1({{bt1g::cw, 1}}), bt1({{bt1g::cxw, 1}})};
    auto pull_t = [&](const BT2Elem& x) {
      return apply_hom(
          x, t, [](const BT1Elem& a, const BT1Elem& b) { return poly_mul_raw(HRing{}, a, b); },
          [](const BT1Elem& a, const BT1Elem& b) { return poly_add(HRing{}, a, b); },
          [](const HCoeff& c) {
            BT1Elem x;
            poly_add_term(HRing{}, x, Monomial{}, c);
            return x;
          });
    };
    const Relation& main = relation("z11*cT");
    BT1Elem lhs = pull_t(main.lhs), rhs = s.reduce(pull_t(main.rhs));
    BT1Elem fund = parse_bt1("(1-kappa)*z0*cw + e^2");
    ck.expect(lhs == bt1({{bt1g::z1, 1}, {bt1g::cxw, 1}}), "t* of z11*cT is z1*cxw");
    ck.expect(rhs == fund, "t* of the right side is (1-kappa)*z0*cw + e^2");
    ck.expect(s.reduce(lhs) == fund, "z1*cxw reduces to (1-kappa)*z0*cw + e^2 in BT1");
    ck.expect(t_star(main.lhs) == t_star(main.rhs), "t* respects the relation");
    // pi pullbacks of the BT1 relation
    const std::vector<BT2Elem> pi1{raw_mono({{z00, 1}, {z01, 1}}), raw_mono({{z10, 1}, {z11, 1}}), raw_mono({{cxw1, 1}}),
                                   raw_mono({{cw1, 1}})};
    const std::vector<BT2Elem> pi2{raw_mono({{z00, 1}, {z10, 1}}), raw_mono({{z01, 1}, {z11, 1}}), raw_mono({{cxw2, 1}}),
                                   raw_mono({{cw2, 1}})};
    BT1Elem flhs = bt1({{bt1g::z1, 1}, {bt1g::cxw, 1}});
    for (const auto& [im, name] : {std::pair{pi1, "z10*z11*cxw1"}, std::pair{pi2, "z01*z11*cxw2"}}) {
      const Relation& want = relation(name);
      ck.expect(raw_sub(flhs, im) == want.lhs && raw_sub(fund, im) == want.rhs,
                std::string("pi* of the BT1 relation is the ") + name + " relation");
    }
  });
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 10 -----------------------------------------------------------------------

std::vector<Monomial> bu2_monomials(int max_weight) {
  const auto& g = *bu2_generators();
  std::vector<Monomial> out{Monomial{}};
  for (int i = 0; i < g.size(); ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (int k = 0; g.weight(m) + k * g.weight(i) <= max_weight; ++k)
        next.push_back(m * Monomial::var(i, k));
    out = std::move(next);
  }
  return out;
}

CriterionResult criterion10() {
  CriterionResult r{10, "projective bundle over BU(2)", false, false, {}};
  Checker ck{r};
  ck.guard("multiplicativity", [&] {
    const auto& g = *bu2_generators();
    auto ms = bu2_monomials(8);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i; j < ms.size(); ++j)
        if (g.weight(ms[i]) + g.weight(ms[j]) <= 8) pairs.emplace_back(i, j);
    std::vector<BT2Elem> images(ms.size());
    std::vector<char> symmetric(ms.size());
    parallel_for(ms.size(), [&](std::size_t i) {
      images[i] = sstar(bu2_term(HCoeff(1), ms[i]));
      symmetric[i] = eq(gamma_star(images[i]), images[i]);
    });
    std::vector<char> ok(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
      auto [i, j] = pairs[k];
      ok[k] = eq(sstar(bu2_term(HCoeff(1), ms[i] * ms[j])), R().mul(images[i], images[j]));
    });
    std::size_t good = std::count(ok.begin(), ok.end(), 1);
    std::size_t sym = std::count(symmetric.begin(), symmetric.end(), 1);
    ck.expect(good == pairs.size(), "s* multiplicative on pairs of weight <= 8");
    ck.expect(sym == ms.size(), "s* images are swap-invariant");
    ck.note("s*: " + std::to_string(good) + "/" + std::to_string(pairs.size()) + " products, " + std::to_string(sym) +
            "/" + std::to_string(ms.size()) + " symmetric images (weight <= 8)");
  });
  ck.guard("example", [&] {
    BT2Elem x = S("Z0^2*Z1^2*cW");
    ck.expect(eq(x, P("xi*z01^2*cw1*cxw2 + e^2*z00*z01^2*z10*cw1")), "s*(Z0^2 Z1^2 cW)");
    ck.expect(R().mul(R().constant(HCoeff::t(3)), x).empty(), "t[3] s*(Z0^2 Z1^2 cW) = 0");
  });
  ck.guard("additive identities", [&] {
    const std::string A = "Z2*cL + u[1]*Z0*Z1*cW", B = "Z0*cL + u[1]*Z1*Z2*cxW", C = "cL*cxL - t[2]*Z0^2*Z1*cW";
    BT2Elem a = P("z01*cw1"), b = P("z10*cxw1"), c = P("cw1*cxw1");
    auto& r2 = R();
    std::vector<std::pair<std::string, bool>> ids{
        {"z10 cw2", eq(P("z10*cw2"), r2.sub(S(A), a))},
        {"z01 cxw2", eq(P("z01*cxw2"), r2.sub(S(B), b))},
        {"cw2 cxw2", eq(P("cw2*cxw2"), r2.sub(S(C), c))},
        {"(z01 cw1)^2", eq(r2.mul(a, a), r2.sub(r2.mul(S(A), a), S("Z1*cW")))},
        {"(z10 cxw1)^2", eq(r2.mul(b, b), r2.sub(r2.mul(S(B), b), S("Z1*cxW")))},
        {"(cw1 cxw1)^2", eq(r2.mul(c, c), r2.sub(r2.mul(S(C), c), S("cW*cxW")))},
        {"z01 cw1 z10 cxw1", eq(r2.mul(a, b), r2.mul(S("Z1"), c))},
        {"z01 cw1 cw1 cxw1",
         eq(r2.mul(a, c), r2.sub(r2.add(r2.mul(S(C), a), r2.mul(S("cW"), b)), S("Z0*cL*cW + u[1]*Z1*Z2*cW*cxW")))},
        // The printed identity has Z1*cL*cxW, which is in the wrong grading.
        {"z10 cxw1 cw1 cxw1",
         eq(r2.mul(b, c), r2.sub(r2.add(r2.mul(S(C), b), r2.mul(S("cxW"), a)), S("Z2*cL*cxW + u[1]*Z0*Z1*cW*cxW")))},
    };
    ck.expect(bu2_grading(parse_bu2("Z1*cL*cxW")) != R().grading(r2.mul(b, c)),
              "printed Z1*cL*cxW term is off-grading");
    for (const auto& [name, ok] : ids) ck.expect(ok, "identity for " + name);
    ck.expect(eq(R().mul(S("Z0*Z1*cxL"), a), R().add(P("xi*cw1*cxw1"), S("Z0^2*Z1*cW"))),
              "s*(Z0 Z1 cxL) z01 cw1 = xi cw1 cxw1 + s*(Z0^2 Z1 cW)");
  });
  ck.guard("mod N", [&] {
    const std::vector<std::pair<const char*, const char*>> bt2_rels{
        {"z00*z01*z10*z11", "0"},        {"z10*z11*cxw1", "z00*z01*cw1"},    {"z01*z11*cxw2", "z00*z10*cw2"},
        {"z00*cT", "z10*cxw1 + z01*cxw2"}, {"z11*cT", "z01*cw1 + z10*cw2"},  {"z01*cxT", "z11*cxw1 + z00*cw2"},
        {"z10*cxT", "z00*cw1 + z11*cxw2"}, {"cT*cxT", "cw1*cxw1 + cw2*cxw2"},
    };
    for (const auto& [l, rhs] : bt2_rels)
      ck.expect(mod_n(R().sub(P(l), P(rhs))).empty(), std::string(l) + " = " + rhs + " mod N");
    const std::vector<std::pair<const char*, const char*>> bu2_rels{
        {"Z0*Z1*Z2", "0"}, {"Z1*cxL", "Z0*Z2*cL"}, {"Z2^2*cxW", "Z0^2*cW"}};
    for (const auto& [l, rhs] : bu2_rels) {
      ck.expect(mod_n(R().sub(S(l), S(rhs))).empty(), std::string(l) + " = " + rhs + " mod N");
      ck.expect(!eq(S(l), S(rhs)), std::string(l) + " = " + rhs + " fails before reduction");
    }
    ck.expect(mod_n(R().sub(R().mul(S("Z0*Z1*cxL"), P("z01*cw1")), S("Z0^2*Z1*cW"))).empty(),
              "s*(Z0 Z1 cxL) z01 cw1 = s*(Z0^2 Z1 cW) mod N");
    ck.expect(h_mod_n(HCoeff(2)) == 0 && h_mod_n(HCoeff::g()) == 0 && h_mod_n(HCoeff::kappa()) == 0,
              "2, g, kappa in N");
    ck.expect(h_mod_n(HCoeff(1)) == 1, "1 not in N");
  });
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 11 -----------------------------------------------------------------------

CriterionResult criterion11() {
  CriterionResult r{11, "pushforward to BU(2)", false, false, {}};
  Checker ck{r};
  ck.guard("values", [&] {
    auto v = pushforward_values();
    const std::array<const char*, 4> want{"u[1]*Z0*Z2", "Z2", "Z0", "-(1-kappa)*(1-u[1]*Z0*Z2*cL)*cxL"};
    for (int i = 0; i < 4; ++i) ck.expect(v[i] == parse_bu2(want[i]), std::string("s_! value ") + want[i]);
    ck.expect(eq(sstar(v[3]), dual_class("cxT")), "s* of the last value is the dual of cxT");
  });
  ck.guard("division rule", [&] {
    auto x = [](int i, int k) {
      Poly<Int> p;
      poly_add_term(IntRing{}, p, Monomial::var(i, k), 1);
      return p;
    };
    Poly<Int> one = x(0, 0);
    ck.expect(ne_pushforward(IntRing{}, one, 0, 1).empty(), "s_!(1) = 0");
    ck.expect(ne_pushforward(IntRing{}, x(0, 1), 0, 1) == one, "s_!(x1) = 1");
    ck.expect(ne_pushforward(IntRing{}, x(1, 1), 0, 1) == poly_neg(IntRing{}, one),
              "s_!(x2) = -1");
    ck.expect(ne_pushforward(IntRing{}, x(0, 2), 0, 1) == x(0, 1), "s_!(x1^2) = c1");
  });
  ck.guard("components", [&] {
    int passed = 0;
    for (const auto& c : check_component_pushforwards()) {
      ck.expect(c.component0, c.generator + " at component 0");
      ck.expect(c.decomposition, c.generator + " decomposition over the middle component");
      ck.expect(c.component1, c.generator + " at component 1");
      ck.expect(c.component2, c.generator + " at component 2");
      if (!c.pass())
        for (const auto& d : c.detail) ck.note("    " + d);
      passed += c.pass();
    }
    ck.note(std::to_string(passed) + "/4 module generators confirmed componentwise");
  });
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 12 -----------------------------------------------------------------------

CriterionResult criterion12() {
  CriterionResult r{12, "Waner classes", false, false, {}};
  Checker ck{r};
  ck.guard("expansion", [&] {
    auto w = waner_total({line_bundle("w1"), line_bundle("w2")});
    ck.expect(w.rank() == 2, "rank 2");
    if (w.rank() != 2) return;
    ck.expect(eq(w.coeffs[0], P("z01*z10*z11^2")) && eq(w.coeffs[0], S("Z1*Z2^2")), "constant term");
    ck.expect(eq(w.coeffs[1], P("z01*z11*cw1 + z10*z11*cw2")), "middle coefficient");
    ck.expect(eq(w.coeffs[1], S("Z2^2*cL")), "middle coefficient is s*(Z2^2 cL)");
    ck.expect(eq(w.coeffs[2], P("cw1*cw2")) && eq(w.coeffs[2], S("cW")), "top coefficient");
  });
  ck.guard("multiplicativity", [&] {
    std::mt19937 gen(20261016);
    auto names = line_bundle_names();
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::uniform_int_distribution<int> len(1, 3);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<LineBundle> a, b;
      std::string label;
      for (int i = len(gen); i > 0; --i) {
        a.push_back(line_bundle(names[pick(gen)]));
        label += a.back().name + " ";
      }
      label += "| ";
      for (int i = len(gen); i > 0; --i) {
        b.push_back(line_bundle(names[pick(gen)]));
        label += b.back().name + " ";
      }
      std::vector<LineBundle> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      ck.expect(waner_total(ab) == waner_product(waner_total(a), waner_total(b)), "W(a+b) = W(a)W(b) for " + label);
      ck.note("bundles " + label);
    }
  });
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 13 -----------------------------------------------------------------------

CriterionResult criterion13() {
  CriterionResult r{13, "Kunneth count convolution", false, false, {}};
  Checker ck{r};
  ck.note("coset W00-W01 is not in SRO; using W01-W10 = pi1*W0 - pi2*W0 and W00+W01 = pi1*W0");
  using Grid = std::map<std::pair<Int, Int>, Int>;
  auto bt1_grid = [&](const GradingBT1& c) {
    Grid g;
    for (const auto& cell : bt1_basis_enumerate(c, {-40, 40, -40, 40}))
      for (const auto& m : cell.monomials) {
        Int n = m[bt1g::cw] + m[bt1g::cxw];
        if (n <= 4) g[{cell.cell.a, cell.cell.b}] += 1;
      }
    return g;
  };
  struct Case {
    const char* name;
    GradingBT1 a1, a2;
  };
  const GradingBT1 zero, w0 = GradingBT1::raw(0, 0, 1, 0);
  for (const auto& cs : {Case{"0", zero, zero}, Case{"W01-W10", w0, -w0}, Case{"W00+W01", w0, zero}}) {
    ck.guard(cs.name, [&] {
      GradingBT2 coset = embed_bt1_pi1(cs.a1) + embed_bt1_pi2(cs.a2);
      ck.expect(coset == parse_grading(cs.name), std::string(cs.name) + " is pi1*a1 + pi2*a2");
      ck.expect(is_sro(coset), std::string(cs.name) + " lies in SRO");
      Grid g1 = bt1_grid(cs.a1), g2 = bt1_grid(cs.a2), conv, direct;
      for (const auto& [c1, n1] : g1)
        for (const auto& [c2, n2] : g2) {
          std::pair<Int, Int> c{c1.first + c2.first, c1.second + c2.second};
          GradingBT2 full = coset + GradingBT2::ro2(c.first, c.second);
          if (rho_deg(full) <= 8) conv[c] += n1 * n2;
        }
      std::map<Int, Int> per_degree;
      for (Int d = 0; d <= 8; d += 2)
        for (const auto& m : basis_by_rho_degree(coset, d)) {
          GradingRO2 c = (R().gens().grading(m) - coset).as_ro2();
          direct[{c.a, c.b}] += 1;
          per_degree[d] += 1;
        }
      ck.expect(conv == direct, std::string(cs.name) + ": BT2 counts equal the convolution");
      // Box self-check: every BT1 degree is covered (one monomial per c-degree).
      for (const auto& g : {g1, g2}) {
        Int total = 0;
        for (const auto& [c, n] : g) total += n;
        ck.expect(total == 5, std::string(cs.name) + ": BT1 window holds all monomials of c-degree <= 4");
      }
      for (const auto& [d, n] : per_degree)
        ck.expect(n == d / 2 + 1, std::string(cs.name) + ": rank " + std::to_string(n) + " at rho-degree " + std::to_string(d));
      ck.note(std::string("coset ") + cs.name + ": " + std::to_string(direct.size()) + " cells up to rho-degree 8");
    });
  }
  ck.note(ck.tally());
  r.pass = ck.ok();
  return r;
}

// ---- 14 -----------------------------------------------------------------------

CriterionResult criterion14() {
  CriterionResult r{14, "coefficient ring rules", false, false, {}};
  Checker ck{r};
  ck.guard("rules", [&] {
    auto h = check_h_rules_homomorphic();
    for (std::size_t i = 0; i < std::min<std::size_t>(h.failures.size(), 5); ++i) ck.note("    " + h.failures[i]);
    ck.expect(h.instances > 0 && h.failures.empty(), "rule instances hold under h_rho and h_phi");
    ck.note(std::to_string(h.instances - h.failures.size()) + "/" + std::to_string(h.instances) + " rule instances");
  });
  ck.guard("confluence", [&] {
    auto c = check_h_confluence();
    for (std::size_t i = 0; i < std::min<std::size_t>(c.failures.size(), 5); ++i) ck.note("    " + c.failures[i]);
    ck.expect(c.pass(), "atom reductions are confluent");
    ck.note(std::to_string(c.monomials) + " atom monomials, " + std::to_string(c.comparisons) + " comparisons");
  });
  r.pass = ck.ok();
  return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const std::array<std::function<CriterionResult()>, kCriterionCount> table{
      criterion1, criterion2,  criterion3,  criterion4,  criterion5,  criterion6,  criterion7,
      criterion8, criterion9, criterion10, criterion11, criterion12, criterion13, criterion14};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  try {
    return table[id - 1]();
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false, false, {std::string("error: ") + e.what()}};
  }
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<int> todo = ids;
  if (todo.empty())
    for (int i = 1; i <= kCriterionCount; ++i) todo.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : todo) out.push_back(run_criterion(id));
  return out;
}

int acceptance_exit_code(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    bool documented = documented_unattainable().count(r.id) > 0;
    if (!r.pass && !(documented && r.known_unattainable)) return 1;
    if (r.pass && documented) return 1;
  }
  return 0;
}

std::string format_report(const std::vector<CriterionResult>& results, bool with_notes) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << "criterion " << (r.id < 10 ? " " : "") << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title;
    if (!r.pass && r.known_unattainable) os << " (known unattainable)";
    os << "\n";
    if (with_notes)
      for (const auto& n : r.notes) os << "    " << n << "\n";
  }
  return os.str();
}

}  // namespace eqc
