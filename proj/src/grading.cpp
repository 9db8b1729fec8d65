// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include "equicohom/grading.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eqc {

namespace {

// Appends coefficient*symbol to a sum being printed; empty symbol is the constant.
void append_term(std::string& out, Int c, const std::string& sym) {
  if (c == 0) return;
  bool neg = c < 0;
  Int mag = neg ? -c : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (sym.empty()) {
    out += std::to_string(mag);
  } else {
    if (mag != 1) out += std::to_string(mag) + "*";
    out += sym;
  }
}

std::string format_terms(const std::vector<std::pair<Int, std::string>>& terms) {
  std::string out;
  for (const auto& [c, s] : terms) append_term(out, c, s);
  return out.empty() ? "0" : out;
}

}  // namespace

GradingRO2 GradingRO2::operator+(const GradingRO2& o) const {
  return {checked_add(a, o.a), checked_add(b, o.b)};
}
GradingRO2 GradingRO2::operator-(const GradingRO2& o) const {
  return {checked_sub(a, o.a), checked_sub(b, o.b)};
}
GradingRO2 GradingRO2::operator-() const { return {checked_neg(a), checked_neg(b)}; }
std::string GradingRO2::str() const { return format_terms({{a, ""}, {b, "s"}}); }

GradingBT2 GradingBT2::raw(Int a, Int b, Int m00, Int m01, Int m10, Int m11) {
  GradingBT2 g;
  // m11*W11 = m11*(2s - 2 - W00 - W01 - W10)
  g.a_ = checked_sub(a, checked_mul(2, m11));
  g.b_ = checked_add(b, checked_mul(2, m11));
  g.m00_ = checked_sub(m00, m11);
  g.m01_ = checked_sub(m01, m11);
  g.m10_ = checked_sub(m10, m11);
  return g;
}

GradingBT2 GradingBT2::omega(int i, int j) {
  Int m[4] = {0, 0, 0, 0};
  m[2 * i + j] = 1;
  return raw(0, 0, m[0], m[1], m[2], m[3]);
}

GradingBT2 GradingBT2::operator+(const GradingBT2& o) const {
  return raw(checked_add(a_, o.a_), checked_add(b_, o.b_), checked_add(m00_, o.m00_),
             checked_add(m01_, o.m01_), checked_add(m10_, o.m10_), 0);
}
GradingBT2 GradingBT2::operator-(const GradingBT2& o) const { return *this + (-o); }
GradingBT2 GradingBT2::operator-() const { return scaled(-1); }
GradingBT2 GradingBT2::scaled(Int k) const {
  return raw(checked_mul(k, a_), checked_mul(k, b_), checked_mul(k, m00_),
             checked_mul(k, m01_), checked_mul(k, m10_), 0);
}

GradingRO2 GradingBT2::as_ro2() const {
  if (!in_ro2()) throw std::domain_error("grading is not in RO(C2): " + str());
  return {a_, b_};
}

std::string GradingBT2::str() const {
  return format_terms(
      {{a_, ""}, {b_, "s"}, {m00_, "W00"}, {m01_, "W01"}, {m10_, "W10"}});
}

GradingBT1 GradingBT1::raw(Int a, Int b, Int m0, Int m1) {
  GradingBT1 g;
  g.a_ = checked_sub(a, checked_mul(2, m1));
  g.b_ = checked_add(b, checked_mul(2, m1));
  g.m0_ = checked_sub(m0, m1);
  return g;
}
GradingBT1 GradingBT1::operator+(const GradingBT1& o) const {
  return raw(checked_add(a_, o.a_), checked_add(b_, o.b_), checked_add(m0_, o.m0_), 0);
}
GradingBT1 GradingBT1::operator-(const GradingBT1& o) const { return *this + (-o); }
GradingBT1 GradingBT1::operator-() const {
  return raw(checked_neg(a_), checked_neg(b_), checked_neg(m0_), 0);
}
std::string GradingBT1::str() const {
  return format_terms({{a_, ""}, {b_, "s"}, {m0_, "W0"}});
}

GradingBU2 GradingBU2::raw(Int a, Int b, Int n0, Int n1, Int n2) {
  return GradingBU2(GradingBT2::raw(a, b, n0, n1, n1, n2));
}
GradingBU2 GradingBU2::operator+(const GradingBU2& o) const {
  return GradingBU2(image_ + o.image_);
}
GradingBU2 GradingBU2::operator-(const GradingBU2& o) const {
  return GradingBU2(image_ - o.image_);
}
std::string GradingBU2::str() const {
  return format_terms({{a(), ""}, {b(), "s"}, {n0(), "W0"}, {n1(), "W1"}});
}

Int rho_deg(const GradingBT2& g) { return checked_add(g.a(), g.b()); }

std::array<Int, 4> phi_deg(const GradingBT2& g) {
  return {checked_sub(g.a(), checked_mul(2, g.m00())),
          checked_sub(g.a(), checked_mul(2, g.m01())),
          checked_sub(g.a(), checked_mul(2, g.m10())), g.a()};
}

bool is_sro_raw(Int m00, Int m01, Int m10, Int m11) {
  return checked_add(m00, m11) == checked_add(m01, m10);
}

bool is_sro(const GradingBT2& g) { return is_sro_raw(g.m00(), g.m01(), g.m10(), 0); }

bool is_even(const GradingBT2& g) { return g.a() % 2 == 0 && g.b() % 2 == 0; }

GradingBT2 embed_bu2(const GradingBU2& g) { return g.image(); }

GradingBT2 embed_bt1_pi1(const GradingBT1& g) {
  return GradingBT2::raw(g.a(), g.b(), g.m0(), g.m0(), 0, 0);
}

GradingBT2 embed_bt1_pi2(const GradingBT1& g) {
  return GradingBT2::raw(g.a(), g.b(), g.m0(), 0, g.m0(), 0);
}

GradingBT2 parse_grading(const std::string& text) {
  Int c[6] = {0, 0, 0, 0, 0, 0};  // 1, s, W00, W01, W10, W11
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("grading parse error at position " + std::to_string(i) +
                                ": " + why);
  };
  bool first = true;
  skip();
  if (i == n) fail("empty grading");
  while (true) {
    skip();
    if (i == n) break;
    Int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Int coef = 1;
    bool have_num = false;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coef = checked_add(checked_mul(coef, 10), text[i] - '0');
        ++i;
      }
      have_num = true;
      skip();
      if (i < n && text[i] == '*') {
        ++i;
        skip();
      } else {
        c[0] = checked_add(c[0], checked_mul(sign, coef));
        continue;
      }
    }
    std::size_t start = i;
    while (i < n && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    std::string sym = text.substr(start, i - start);
    int slot = -1;
    if (sym == "s") slot = 1;
    else if (sym == "W00") slot = 2;
    else if (sym == "W01") slot = 3;
    else if (sym == "W10") slot = 4;
    else if (sym == "W11") slot = 5;
    if (slot < 0) {
      i = start;
      fail(have_num ? "expected s, W00, W01, W10 or W11 after '*'"
                    : "expected integer, s, W00, W01, W10 or W11");
    }
    c[slot] = checked_add(c[slot], checked_mul(sign, coef));
  }
  return GradingBT2::raw(c[0], c[1], c[2], c[3], c[4], c[5]);
}

}  // namespace eqc
