// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "equicohom/maps.hpp"

namespace eqc {

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("at position " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

// Expression tree for the infix grammar: + - * ^ ( ), integers, names and
// indexed atoms u[n], t[n].
struct Expr {
  enum class Kind { Num, Sym, Indexed, Add, Sub, Neg, Mul, Pow };
  Kind kind = Kind::Num;
  Int value = 0;  // number, index, or exponent
  std::string name;
  std::size_t pos = 0;
  std::vector<Expr> kids;
};

Expr parse_expr(const std::string& text);

// Evaluation into the supported rings. Unknown names raise ParseError.
HCoeff eval_hcoeff(const Expr& e);
BT2Elem eval_bt2(const Expr& e);
BT1Elem eval_bt1(const Expr& e);
BU2Poly eval_bu2(const Expr& e);
PhiElem eval_bt2_phi(const Expr& e);  // e may carry negative powers
PhiElem eval_bt2_rho(const Expr& e);  // iota may carry negative powers
// Fixed-point and nonequivariant targets (rho_target, phi_target, eta_target).
Poly<Int> eval_target(const Expr& e, const IntTarget& t);
Poly<HCoeff> eval_eta_target(const Expr& e);

inline BT2Elem parse_bt2(const std::string& s) { return eval_bt2(parse_expr(s)); }
inline BT1Elem parse_bt1(const std::string& s) { return eval_bt1(parse_expr(s)); }
inline BU2Poly parse_bu2(const std::string& s) { return eval_bu2(parse_expr(s)); }
inline PhiElem parse_bt2_phi(const std::string& s) { return eval_bt2_phi(parse_expr(s)); }
inline PhiElem parse_bt2_rho(const std::string& s) { return eval_bt2_rho(parse_expr(s)); }
inline Poly<Int> parse_target(const std::string& s, const IntTarget& t) { return eval_target(parse_expr(s), t); }
inline Poly<HCoeff> parse_eta_target(const std::string& s) { return eval_eta_target(parse_expr(s)); }

}  // namespace eqc
