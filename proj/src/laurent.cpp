// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include "equicohom/laurent.hpp"

namespace eqc {

Laurent Laurent::monomial(Int c, Int k) {
  Laurent r;
  r.add_term(k, c);
  return r;
}

Int Laurent::coeff(Int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

void Laurent::add_term(Int k, Int c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, checked_neg(c));
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(checked_add(k1, k2), checked_mul(c1, c2));
  return r;
}

std::string Laurent::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    Int mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += var;
    if (k != 1) out += "^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
  }
  return out;
}

}  // namespace eqc
