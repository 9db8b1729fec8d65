// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "equicohom/grading.hpp"
#include "equicohom/hcoeff.hpp"
#include "equicohom/laurent.hpp"

namespace eqc {

// Coefficient rings share a minimal contract: zero, one, from_int, add, neg,
// mul, is_zero, single_term, str. value_type equality is normal-form equality.

struct IntRing {
  using value_type = Int;
  Int zero() const { return 0; }
  Int one() const { return 1; }
  Int from_int(Int c) const { return c; }
  Int add(Int a, Int b) const { return checked_add(a, b); }
  Int neg(Int a) const { return checked_neg(a); }
  Int mul(Int a, Int b) const { return checked_mul(a, b); }
  bool is_zero(Int a) const { return a == 0; }
  bool single_term(Int) const { return true; }
  std::string str(Int a) const { return std::to_string(a); }
};

struct HRing {
  using value_type = HCoeff;
  HCoeff zero() const { return {}; }
  HCoeff one() const { return HCoeff(1); }
  HCoeff from_int(Int c) const { return HCoeff(c); }
  HCoeff add(const HCoeff& a, const HCoeff& b) const { return a + b; }
  HCoeff neg(const HCoeff& a) const { return -a; }
  HCoeff mul(const HCoeff& a, const HCoeff& b) const { return a * b; }
  bool is_zero(const HCoeff& a) const { return a.is_zero(); }
  bool single_term(const HCoeff& a) const { return a.single_term(); }
  std::string str(const HCoeff& a) const { return a.str(); }
  std::optional<GradingBT2> grading(const HCoeff& a) const {
    auto g = a.grading();
    if (!g) return std::nullopt;
    return GradingBT2::ro2(g->a, g->b);
  }
};

// Z[v, v^-1] for a named variable (iota or e).
struct LaurentRing {
  using value_type = Laurent;
  std::string var = "iota";
  Laurent zero() const { return {}; }
  Laurent one() const { return Laurent::constant(1); }
  Laurent from_int(Int c) const { return Laurent::constant(c); }
  Laurent add(const Laurent& a, const Laurent& b) const { return a + b; }
  Laurent neg(const Laurent& a) const { return -a; }
  Laurent mul(const Laurent& a, const Laurent& b) const { return a * b; }
  bool is_zero(const Laurent& a) const { return a.is_zero(); }
  bool single_term(const Laurent& a) const { return a.terms().size() == 1; }
  std::string str(const Laurent& a) const { return a.str(var); }
};

struct Mod2Ring {
  using value_type = int;
  int zero() const { return 0; }
  int one() const { return 1; }
  int from_int(Int c) const { return static_cast<int>(mod_pos(c, 2)); }
  int add(int a, int b) const { return (a + b) & 1; }
  int neg(int a) const { return a; }
  int mul(int a, int b) const { return a & b; }
  bool is_zero(int a) const { return a == 0; }
  bool single_term(int) const { return true; }
  std::string str(int a) const { return std::to_string(a); }
};

}  // namespace eqc
