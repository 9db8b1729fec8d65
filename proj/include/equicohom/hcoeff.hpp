// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "equicohom/grading.hpp"
#include "equicohom/integer.hpp"
#include "equicohom/laurent.hpp"

namespace eqc {

// Raised for atom products no rule reduces and that are not normal.
struct FragmentError : std::domain_error {
  explicit FragmentError(const std::string& what) : std::domain_error(what) {}
};

struct GradingMismatch : std::domain_error {
  explicit GradingMismatch(const std::string& what) : std::domain_error(what) {}
};

// Normal monomials of the coefficient ring: e^p xi^q, kappa, u[p], t[p].
struct HMono {
  enum class Kind : std::uint8_t { Ex = 0, Kappa = 1, U = 2, T = 3 };
  Kind kind = Kind::Ex;
  Int p = 0;
  Int q = 0;

  auto operator<=>(const HMono&) const = default;
  bool operator==(const HMono&) const = default;
  GradingRO2 grading() const;
  // Coefficients of this monomial live in Z/2.
  bool torsion() const;
  std::string str() const;
};

// Atom-monomial: e^a xi^b kappa^k g^g prod u[n] prod t[n].
struct Atoms {
  Int a = 0, b = 0, kappa = 0, g = 0;
  std::vector<Int> u;  // sorted
  std::vector<Int> t;  // sorted, entries >= 2

  auto operator<=>(const Atoms&) const = default;
  bool operator==(const Atoms&) const = default;
  std::string str() const;
};

class HCoeff {
 public:
  HCoeff() = default;
  HCoeff(Int c);  // NOLINT: integers embed implicitly

  static HCoeff mono(const HMono& m, Int c = 1);
  static HCoeff e(Int a = 1) { return mono({HMono::Kind::Ex, a, 0}); }
  static HCoeff xi(Int b = 1) { return mono({HMono::Kind::Ex, 0, b}); }
  static HCoeff kappa() { return mono({HMono::Kind::Kappa, 0, 0}); }
  static HCoeff g();
  static HCoeff u(Int n);
  static HCoeff t(Int n);
  static HCoeff from_atoms(const Atoms& at);

  bool is_zero() const { return terms_.empty(); }
  std::optional<GradingRO2> grading() const;
  const std::map<HMono, Int>& terms() const { return terms_; }
  std::optional<Int> as_integer() const;
  bool single_term() const { return terms_.size() == 1; }

  HCoeff operator+(const HCoeff& o) const;
  HCoeff operator-(const HCoeff& o) const;
  HCoeff operator-() const;
  HCoeff operator*(const HCoeff& o) const;
  HCoeff& operator+=(const HCoeff& o);
  bool operator==(const HCoeff&) const = default;
  auto operator<=>(const HCoeff&) const = default;

  std::string str() const;

 private:
  void add_term(const HMono& m, Int c);
  std::map<HMono, Int> terms_;
};

// Atom-level rule table.
struct HRule {
  std::string name;
  std::string text;
};
const std::vector<HRule>& h_rules();

// One-step application of a named rule; nullopt if it does not apply.
std::optional<std::vector<std::pair<Int, Atoms>>> apply_h_rule(const std::string& name,
                                                               const Atoms& at);

Laurent h_rho(const HCoeff& x);  // in iota
Laurent h_phi(const HCoeff& x);  // in e
Laurent h_rho_atoms(const Atoms& at);
Laurent h_phi_atoms(const Atoms& at);
// Image in H/N = Z/2; nonzero only for odd integers in grading 0.
int h_mod_n(const HCoeff& x);

struct HRuleCheck {
  std::size_t instances = 0;
  std::vector<std::string> failures;
};
// Checks every rule instance in the atom box maps to an identity under h_rho and h_phi.
HRuleCheck check_h_rules_homomorphic();

struct HConfluenceReport {
  std::size_t monomials = 0;
  std::size_t comparisons = 0;
  std::size_t error_branches = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};
HConfluenceReport check_h_confluence();

// The box of atom-monomials used by both checks.
std::vector<Atoms> h_atom_box();

}  // namespace eqc
