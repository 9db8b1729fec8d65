// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>

#include "equicohom/integer.hpp"

namespace eqc {

// a + b*sigma in RO(C2).
struct GradingRO2 {
  Int a = 0;
  Int b = 0;

  GradingRO2() = default;
  GradingRO2(Int a_, Int b_) : a(a_), b(b_) {}

  GradingRO2 operator+(const GradingRO2& o) const;
  GradingRO2 operator-(const GradingRO2& o) const;
  GradingRO2 operator-() const;
  bool operator==(const GradingRO2&) const = default;
  auto operator<=>(const GradingRO2&) const = default;
  std::string str() const;
};

// a + b*s + m00*W00 + m01*W01 + m10*W10, with W11 eliminated via
// W00 + W01 + W10 + W11 = 2s - 2.
class GradingBT2 {
 public:
  GradingBT2() = default;
  // Raw coefficients including m11; normalized on construction.
  static GradingBT2 raw(Int a, Int b, Int m00, Int m01, Int m10, Int m11);
  static GradingBT2 ro2(Int a, Int b) { return raw(a, b, 0, 0, 0, 0); }
  static GradingBT2 omega(int i, int j);

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int m00() const { return m00_; }
  Int m01() const { return m01_; }
  Int m10() const { return m10_; }

  GradingBT2 operator+(const GradingBT2& o) const;
  GradingBT2 operator-(const GradingBT2& o) const;
  GradingBT2 operator-() const;
  GradingBT2 scaled(Int k) const;
  bool operator==(const GradingBT2&) const = default;
  auto operator<=>(const GradingBT2&) const = default;

  // True when the grading lies in RO(C2), i.e. all m vanish.
  bool in_ro2() const { return m00_ == 0 && m01_ == 0 && m10_ == 0; }
  GradingRO2 as_ro2() const;
  std::string str() const;

 private:
  Int a_ = 0, b_ = 0, m00_ = 0, m01_ = 0, m10_ = 0;
};

// a + b*s + m0*W0, with W1 eliminated via W0 + W1 = 2s - 2.
class GradingBT1 {
 public:
  GradingBT1() = default;
  static GradingBT1 raw(Int a, Int b, Int m0, Int m1);
  Int a() const { return a_; }
  Int b() const { return b_; }
  Int m0() const { return m0_; }
  GradingBT1 operator+(const GradingBT1& o) const;
  GradingBT1 operator-(const GradingBT1& o) const;
  GradingBT1 operator-() const;
  bool operator==(const GradingBT1&) const = default;
  auto operator<=>(const GradingBT1&) const = default;
  bool in_ro2() const { return m0_ == 0; }
  GradingRO2 as_ro2() const { return {a_, b_}; }
  std::string str() const;

 private:
  Int a_ = 0, b_ = 0, m0_ = 0;
};

// Image model of RO(Pi BU(2)): a + b*s + n0*W0 + n1*W1 + n2*W2 with
// s*(W0) = W00, s*(W1) = W01 + W10, s*(W2) = W11.
class GradingBU2 {
 public:
  GradingBU2() = default;
  static GradingBU2 raw(Int a, Int b, Int n0, Int n1, Int n2);
  const GradingBT2& image() const { return image_; }
  Int a() const { return image_.a(); }
  Int b() const { return image_.b(); }
  Int n0() const { return image_.m00(); }
  Int n1() const { return image_.m01(); }
  GradingBU2 operator+(const GradingBU2& o) const;
  GradingBU2 operator-(const GradingBU2& o) const;
  bool operator==(const GradingBU2&) const = default;
  std::string str() const;
  static GradingBU2 lambda() { return raw(2, 0, 0, 1, 0); }

 private:
  explicit GradingBU2(const GradingBT2& g) : image_(g) {}
  GradingBT2 image_;
};

Int rho_deg(const GradingBT2& g);
std::array<Int, 4> phi_deg(const GradingBT2& g);
// Raw form: m00 + m11 == m01 + m10.
bool is_sro_raw(Int m00, Int m01, Int m10, Int m11);
bool is_sro(const GradingBT2& g);
bool is_even(const GradingBT2& g);

GradingBT2 embed_bu2(const GradingBU2& g);
GradingBT2 embed_bt1_pi1(const GradingBT1& g);
GradingBT2 embed_bt1_pi2(const GradingBT1& g);

// Parses "a + b*s + m00*W00 + ..." (terms in any order, W11 allowed).
GradingBT2 parse_grading(const std::string& text);

}  // namespace eqc
