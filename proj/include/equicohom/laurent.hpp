// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "equicohom/integer.hpp"

namespace eqc {

// Integer Laurent polynomial in one variable.
class Laurent {
 public:
  Laurent() = default;
  static Laurent constant(Int c) { return monomial(c, 0); }
  static Laurent monomial(Int c, Int k);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Int, Int>& terms() const { return terms_; }
  Int coeff(Int k) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  bool operator==(const Laurent&) const = default;
  auto operator<=>(const Laurent&) const = default;

  std::string str(const std::string& var) const;

 private:
  void add_term(Int k, Int c);
  std::map<Int, Int> terms_;
};

}  // namespace eqc
