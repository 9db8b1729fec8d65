// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include "equicohom/expr.hpp"

#include <cctype>
#include <optional>
#include <type_traits>

namespace eqc {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Expr run() {
    skip();
    if (at_end()) throw ParseError(i_, "empty expression");
    Expr e = sum();
    skip();
    if (!at_end()) throw ParseError(i_, std::string("unexpected '") + s_[i_] + "', expected operator or end");
    return e;
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (!at_end() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Expr sum() {
    skip();
    std::size_t p = i_;
    Expr e;
    if (eat('-')) {
      Expr t = product();
      e = Expr{Expr::Kind::Neg, 0, "", p, {std::move(t)}};
    } else {
      eat('+');
      e = product();
    }
    while (true) {
      skip();
      p = i_;
      if (eat('+')) {
        e = Expr{Expr::Kind::Add, 0, "", p, {std::move(e), product()}};
      } else if (eat('-')) {
        e = Expr{Expr::Kind::Sub, 0, "", p, {std::move(e), product()}};
      } else {
        return e;
      }
    }
  }

  Expr product() {
    Expr e = power();
    while (true) {
      skip();
      std::size_t p = i_;
      if (!eat('*')) return e;
      e = Expr{Expr::Kind::Mul, 0, "", p, {std::move(e), power()}};
    }
  }

  Expr power() {
    Expr base = atom();
    skip();
    std::size_t p = i_;
    if (!eat('^')) return base;
    Int k;
    if (eat('(')) {
      bool neg = eat('-');
      k = integer("exponent");
      if (!eat(')')) throw ParseError(i_, "expected ')'");
      if (neg) k = -k;
    } else {
      bool neg = eat('-');
      k = integer("exponent");
      if (neg) k = -k;
    }
    return Expr{Expr::Kind::Pow, k, "", p, {std::move(base)}};
  }

  Int integer(const char* what) {
    skip();
    std::size_t start = i_;
    Int v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = checked_add(checked_mul(v, 10), s_[i_] - '0');
      ++i_;
    }
    if (i_ == start) throw ParseError(i_, std::string("expected ") + what);
    return v;
  }

  Expr atom() {
    skip();
    std::size_t p = i_;
    if (at_end()) throw ParseError(i_, "expected generator, number or '('");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Expr e = sum();
      if (!eat(')')) throw ParseError(i_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr{Expr::Kind::Num, integer("number"), "", p, {}};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) name += s_[i_++];
      if (eat('[')) {
        Int n = integer("index");
        if (!eat(']')) throw ParseError(i_, "expected ']'");
        return Expr{Expr::Kind::Indexed, n, name, p, {}};
      }
      return Expr{Expr::Kind::Sym, 0, name, p, {}};
    }
    throw ParseError(p, std::string("unexpected '") + c + "', expected generator, number or '('");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

// Ops: num, sym(name, pos), indexed(name, n, pos), sym_pow(name, k, pos),
// add, sub, neg, mul, pow(x, k, pos).
template <class Ops>
typename Ops::Elem eval(const Expr& e, const Ops& ops) {
  switch (e.kind) {
    case Expr::Kind::Num: return ops.num(e.value);
    case Expr::Kind::Sym: return ops.sym(e.name, e.pos);
    case Expr::Kind::Indexed: return ops.indexed(e.name, e.value, e.pos);
    case Expr::Kind::Add: return ops.add(eval(e.kids[0], ops), eval(e.kids[1], ops));
    case Expr::Kind::Sub: return ops.sub(eval(e.kids[0], ops), eval(e.kids[1], ops));
    case Expr::Kind::Neg: return ops.neg(eval(e.kids[0], ops));
    case Expr::Kind::Mul: return ops.mul(eval(e.kids[0], ops), eval(e.kids[1], ops));
    case Expr::Kind::Pow:
      if (e.kids[0].kind == Expr::Kind::Sym) return ops.sym_pow(e.kids[0].name, e.value, e.pos);
      if (e.value < 0) throw ParseError(e.pos, "negative exponent");
      {
        auto base = eval(e.kids[0], ops);
        auto r = ops.num(1);
        for (Int i = 0; i < e.value; ++i) r = ops.mul(r, base);
        return r;
      }
  }
  throw ParseError(e.pos, "bad expression");
}

std::optional<HCoeff> h_atom(const std::string& name) {
  if (name == "e") return HCoeff::e(1);
  if (name == "xi") return HCoeff::xi(1);
  if (name == "kappa") return HCoeff::kappa();
  if (name == "g") return HCoeff::g();
  return std::nullopt;
}

HCoeff h_indexed(const std::string& name, Int n, std::size_t pos) {
  try {
    if (name == "u") return HCoeff::u(n);
    if (name == "t") return HCoeff::t(n);
  } catch (const FragmentError& err) {
    throw ParseError(pos, err.what());
  }
  throw ParseError(pos, "unknown indexed atom " + name + "[], expected u[n] or t[n]");
}

// Ring-valued ops over a ring with add/sub/neg/mul/constant/gen and a
// generator set; coefficients are H atoms.
template <class RingT>
struct HPolyOps {
  using Elem = Poly<HCoeff>;
  const RingT& r;
  const GeneratorSet& gens;
  Elem num(Int v) const { return r.constant(HCoeff(v)); }
  Elem sym(const std::string& name, std::size_t pos) const {
    if (auto c = h_atom(name)) return r.constant(*c);
    auto i = gens.index(name);
    if (!i) throw ParseError(pos, "unknown name '" + name + "', expected one of " + names());
    return r.gen(*i);
  }
  Elem indexed(const std::string& name, Int n, std::size_t pos) const {
    return r.constant(h_indexed(name, n, pos));
  }
  Elem sym_pow(const std::string& name, Int k, std::size_t pos) const {
    if (k < 0) throw ParseError(pos, "negative exponent on " + name);
    if (name == "e" || name == "xi") {
      try {
        return r.constant(name == "e" ? HCoeff::e(k) : HCoeff::xi(k));
      } catch (const FragmentError& err) {
        throw ParseError(pos, err.what());
      }
    }
    Elem b = sym(name, pos), out = num(1);
    for (Int i = 0; i < k; ++i) out = r.mul(out, b);
    return out;
  }
  Elem add(const Elem& a, const Elem& b) const { return r.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return r.sub(a, b); }
  Elem neg(const Elem& a) const { return r.neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return r.mul(a, b); }
  std::string names() const {
    std::string s;
    for (const auto& n : gens.names()) s += n + " ";
    return s + "e xi kappa g u[n] t[n]";
  }
};

// BU(2) symbols form a free polynomial ring.
struct FreeBU2 {
  BU2Poly constant(const HCoeff& c) const { return bu2_term(c, {}); }
  BU2Poly gen(int i) const { return bu2_gen(i); }
  BU2Poly add(const BU2Poly& a, const BU2Poly& b) const { return bu2_add(a, b); }
  BU2Poly sub(const BU2Poly& a, const BU2Poly& b) const { return bu2_sub(a, b); }
  BU2Poly neg(const BU2Poly& a) const { return poly_neg(HRing{}, a); }
  BU2Poly mul(const BU2Poly& a, const BU2Poly& b) const { return bu2_mul(a, b); }
};

// Ring after a Laurent base change; `unit` names the invertible variable.
struct LaurentOps {
  using Elem = PhiElem;
  const BT2Model<LaurentRing>& r;
  std::string unit;
  Elem num(Int v) const { return r.integer(v); }
  Elem sym(const std::string& name, std::size_t pos) const { return sym_pow(name, 1, pos); }
  Elem indexed(const std::string&, Int, std::size_t pos) const {
    throw ParseError(pos, "indexed atoms are not defined after the fixed-point base change");
  }
  Elem sym_pow(const std::string& name, Int k, std::size_t pos) const {
    if (name == unit) return r.constant(Laurent::monomial(1, k));
    if (k < 0) throw ParseError(pos, "negative exponent on " + name);
    auto i = r.gens().index(name);
    if (!i) throw ParseError(pos, "unknown name '" + name + "', expected a generator or " + unit);
    return r.pow(r.gen(*i), static_cast<int>(k));
  }
  Elem add(const Elem& a, const Elem& b) const { return r.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return r.sub(a, b); }
  Elem neg(const Elem& a) const { return r.neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return r.mul(a, b); }
};

struct HOps {
  using Elem = HCoeff;
  Elem num(Int v) const { return HCoeff(v); }
  Elem sym(const std::string& name, std::size_t pos) const {
    if (auto c = h_atom(name)) return *c;
    throw ParseError(pos, "unknown name '" + name + "', expected e xi kappa g u[n] t[n]");
  }
  Elem indexed(const std::string& name, Int n, std::size_t pos) const { return h_indexed(name, n, pos); }
  Elem sym_pow(const std::string& name, Int k, std::size_t pos) const {
    if (k < 0) throw ParseError(pos, "negative exponent on " + name);
    Elem b = sym(name, pos), out(1);
    for (Int i = 0; i < k; ++i) out = out * b;
    return out;
  }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

// Laurent targets: zeta's and the unit variable may carry negative powers.
template <class CR>
struct TargetOps {
  using Elem = typename TargetAlgebra<CR>::Elem;
  const TargetAlgebra<CR>& t;
  Elem coeff(const typename CR::value_type& v) const { return t.term(v, {}); }
  Elem num(Int v) const { return coeff(t.ring.from_int(v)); }
  Elem sym(const std::string& name, std::size_t pos) const { return sym_pow(name, 1, pos); }
  Elem indexed(const std::string& name, Int n, std::size_t pos) const {
    if constexpr (std::is_same_v<CR, HRing>) {
      return coeff(h_indexed(name, n, pos));
    } else {
      throw ParseError(pos, "indexed atoms are not defined in this target");
    }
  }
  Elem sym_pow(const std::string& name, Int k, std::size_t pos) const {
    if constexpr (std::is_same_v<CR, HRing>) {
      if (auto c = h_atom(name)) {
        if (k < 0) throw ParseError(pos, "negative exponent on " + name);
        Elem out = num(1);
        for (Int i = 0; i < k; ++i) out = t.mul(out, coeff(*c));
        return out;
      }
    }
    auto i = t.gens->index(name);
    if (!i || (std::is_same_v<CR, HRing> && *i == tg::unit))
      throw ParseError(pos, "unknown name '" + name + "' in target");
    if (k < 0 && (*i == tg::x1 || *i == tg::x2)) throw ParseError(pos, "negative exponent on " + name);
    return t.var(*i, static_cast<int>(k));
  }
  Elem add(const Elem& a, const Elem& b) const { return t.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return t.sub(a, b); }
  Elem neg(const Elem& a) const { return t.neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return t.mul(a, b); }
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).run(); }

HCoeff eval_hcoeff(const Expr& e) { return eval(e, HOps{}); }

BT2Elem eval_bt2(const Expr& e) { return eval(e, HPolyOps<BT2>{bt2(), bt2().gens()}); }

BT1Elem eval_bt1(const Expr& e) {
  const auto& s = *bt1_system();
  return eval(e, HPolyOps<BT1System>{s, s.gens()});
}

BU2Poly eval_bu2(const Expr& e) {
  static const FreeBU2 free;
  return eval(e, HPolyOps<FreeBU2>{free, *bu2_generators()});
}

PhiElem eval_bt2_phi(const Expr& e) { return eval(e, LaurentOps{bt2_phi(), "e"}); }

PhiElem eval_bt2_rho(const Expr& e) { return eval(e, LaurentOps{bt2_rho(), "iota"}); }

Poly<Int> eval_target(const Expr& e, const IntTarget& t) { return eval(e, TargetOps<IntRing>{t}); }

Poly<HCoeff> eval_eta_target(const Expr& e) { return eval(e, TargetOps<HRing>{eta_target()}); }

}  // namespace eqc
