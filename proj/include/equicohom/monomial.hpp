// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

#include "equicohom/integer.hpp"

namespace eqc {

constexpr int kMaxGens = 12;

// Exponent vector; entries may be negative when used in Laurent targets.
struct Monomial {
  std::array<std::int32_t, kMaxGens> e{};

  static Monomial var(int i, std::int32_t k = 1) {
    Monomial m;
    m.e[i] = k;
    return m;
  }

  std::int32_t operator[](int i) const { return e[i]; }
  std::int32_t& operator[](int i) { return e[i]; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxGens; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  // Exponent difference; caller checks divisibility where it matters.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxGens; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  Monomial pow(std::int32_t k) const {
    Monomial r;
    for (int i = 0; i < kMaxGens; ++i) r.e[i] = e[i] * k;
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxGens; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
  }
  bool nonnegative() const {
    return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x >= 0; });
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxGens; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxGens; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

// Sparse polynomial: monomial -> nonzero coefficient.
template <class V>
using Poly = std::map<Monomial, V>;

}  // namespace eqc
