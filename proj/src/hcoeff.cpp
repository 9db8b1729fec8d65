// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include "equicohom/hcoeff.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace eqc {

namespace {

using Branches = std::vector<std::pair<Int, Atoms>>;
using RuleFn = std::function<std::optional<Branches>(const Atoms&)>;

void erase_one(std::vector<Int>& v, Int x) { v.erase(std::find(v.begin(), v.end(), x)); }

void insert_sorted(std::vector<Int>& v, Int x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

Branches one(Int c, Atoms at) { return {{c, std::move(at)}}; }

struct RuleEntry {
  HRule rule;
  RuleFn fn;
};

// Application order matters only for speed; the box check covers all orders.
const std::vector<RuleEntry>& rule_table() {
  static const std::vector<RuleEntry> table = [] {
    std::vector<RuleEntry> r;
    r.push_back({{"H8", "g -> 2 - kappa"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.g < 1) return std::nullopt;
                   Atoms x = at;
                   --x.g;
                   Atoms y = x;
                   ++y.kappa;
                   return Branches{{2, x}, {-1, y}};
                 }});
    r.push_back({{"H1", "kappa^2 -> 2*kappa"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.kappa < 2) return std::nullopt;
                   Atoms x = at;
                   --x.kappa;
                   return one(2, x);
                 }});
    r.push_back({{"H12", "kappa*xi -> 0"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.kappa < 1 || at.b < 1) return std::nullopt;
                   return Branches{};
                 }});
    r.push_back({{"H11a", "g*e -> 0"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.g < 1 || at.a < 1) return std::nullopt;
                   return Branches{};
                 }});
    r.push_back({{"H11b", "kappa*e -> 2*e"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.kappa < 1 || at.a < 1) return std::nullopt;
                   Atoms x = at;
                   --x.kappa;
                   return one(2, x);
                 }});
    r.push_back({{"H2", "e^2*u[n] -> u[n-1], u[0] = kappa"},
                 [](const Atoms& at) -> std::optional<Branches> {
                   if (at.a < 2 || at.u.empty()) return std::nullopt;
                   Atoms x = at;
                   x.a -= 2;
                   Int n = x.u.front();
                   x.u.erase(x.u.begin());
                   if (n == 1) ++x.kappa;
                   else insert_sorted(x.u, n - 1);
                   return one(1, x);
                 }});
    r.push_back({{"H3", "xi*u[n] -> 0"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.b < 1 || at.u.empty()) return std::nullopt;
                   return Branches{};
                 }});
    r.push_back({{"H4", "g*u[n] -> 0"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.g < 1 || at.u.empty()) return std::nullopt;
                   return Branches{};
                 }});
    r.push_back({{"H13", "kappa*u[n] -> 2*u[n]"},
                 [](const Atoms& at) -> std::optional<Branches> {
                   if (at.kappa < 1 || at.u.empty()) return std::nullopt;
                   Atoms x = at;
                   --x.kappa;
                   return one(2, x);
                 }});
    r.push_back({{"H9", "u[n]*u[m] -> 2*u[n+m]"},
                 [](const Atoms& at) -> std::optional<Branches> {
                   if (at.u.size() < 2) return std::nullopt;
                   Atoms x = at;
                   Int s = checked_add(x.u[0], x.u[1]);
                   x.u.erase(x.u.begin(), x.u.begin() + 2);
                   insert_sorted(x.u, s);
                   return one(2, x);
                 }});
    r.push_back({{"H5", "xi*t[2] -> g"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.b < 1 || std::find(at.t.begin(), at.t.end(), 2) == at.t.end())
                     return std::nullopt;
                   Atoms x = at;
                   --x.b;
                   erase_one(x.t, 2);
                   ++x.g;
                   return one(1, x);
                 }});
    r.push_back({{"H6", "xi*t[3] -> 0"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.b < 1 || std::find(at.t.begin(), at.t.end(), 3) == at.t.end())
                     return std::nullopt;
                   return Branches{};
                 }});
    r.push_back({{"H10b", "xi*t[n] -> t[n-2], n >= 4"},
                 [](const Atoms& at) -> std::optional<Branches> {
                   if (at.b < 1) return std::nullopt;
                   auto it = std::find_if(at.t.begin(), at.t.end(), [](Int n) { return n >= 4; });
                   if (it == at.t.end()) return std::nullopt;
                   Atoms x = at;
                   Int n = *it;
                   --x.b;
                   erase_one(x.t, n);
                   insert_sorted(x.t, n - 2);
                   return one(1, x);
                 }});
    r.push_back({{"H7", "e*t[n] -> 0"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.a < 1 || at.t.empty()) return std::nullopt;
                   return Branches{};
                 }});
    r.push_back({{"H10a", "t[n]*t[m] -> 2*t[n+m] if n, m even, else 0"},
                 [](const Atoms& at) -> std::optional<Branches> {
                   if (at.t.size() < 2) return std::nullopt;
                   Int n = at.t[0], m = at.t[1];
                   if (n % 2 != 0 || m % 2 != 0) return Branches{};
                   Atoms x = at;
                   x.t.erase(x.t.begin(), x.t.begin() + 2);
                   insert_sorted(x.t, checked_add(n, m));
                   return one(2, x);
                 }});
    r.push_back({{"H10c", "u[m]*t[n] -> 0"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.u.empty() || at.t.empty()) return std::nullopt;
                   return Branches{};
                 }});
    r.push_back({{"H10d", "kappa*t[n] -> 0"}, [](const Atoms& at) -> std::optional<Branches> {
                   if (at.kappa < 1 || at.t.empty()) return std::nullopt;
                   return Branches{};
                 }});
    return r;
  }();
  return table;
}

std::optional<HMono> normal_mono(const Atoms& at) {
  const bool bare = at.kappa == 0 && at.g == 0 && at.u.empty() && at.t.empty();
  if (bare) return HMono{HMono::Kind::Ex, at.a, at.b};
  if (at.a != 0 || at.b != 0 || at.g != 0) return std::nullopt;
  if (at.kappa == 1 && at.u.empty() && at.t.empty()) return HMono{HMono::Kind::Kappa, 0, 0};
  if (at.kappa == 0 && at.u.size() == 1 && at.t.empty()) return HMono{HMono::Kind::U, at.u[0], 0};
  if (at.kappa == 0 && at.u.empty() && at.t.size() == 1) return HMono{HMono::Kind::T, at.t[0], 0};
  return std::nullopt;
}

Atoms to_atoms(const HMono& m) {
  Atoms at;
  switch (m.kind) {
    case HMono::Kind::Ex: at.a = m.p; at.b = m.q; break;
    case HMono::Kind::Kappa: at.kappa = 1; break;
    case HMono::Kind::U: at.u = {m.p}; break;
    case HMono::Kind::T: at.t = {m.p}; break;
  }
  return at;
}

Atoms merge(const Atoms& x, const Atoms& y) {
  Atoms r;
  r.a = checked_add(x.a, y.a);
  r.b = checked_add(x.b, y.b);
  r.kappa = checked_add(x.kappa, y.kappa);
  r.g = checked_add(x.g, y.g);
  r.u = x.u;
  for (Int n : y.u) insert_sorted(r.u, n);
  r.t = x.t;
  for (Int n : y.t) insert_sorted(r.t, n);
  return r;
}

HCoeff normalize_atoms(const Atoms& at) {
  thread_local std::map<Atoms, HCoeff> cache;
  if (auto it = cache.find(at); it != cache.end()) return it->second;
  HCoeff out;
  if (auto m = normal_mono(at)) {
    out = HCoeff::mono(*m);
  } else {
    bool applied = false;
    for (const auto& entry : rule_table()) {
      auto br = entry.fn(at);
      if (!br) continue;
      for (const auto& [c, x] : *br) out += HCoeff(c) * normalize_atoms(x);
      applied = true;
      break;
    }
    if (!applied) throw FragmentError("outside validated fragment: " + at.str());
  }
  cache.emplace(at, out);
  return out;
}

HCoeff mono_product(const HMono& x, const HMono& y) {
  if (x.kind == HMono::Kind::Ex && y.kind == HMono::Kind::Ex)
    return HCoeff::mono({HMono::Kind::Ex, checked_add(x.p, y.p), checked_add(x.q, y.q)});
  thread_local std::map<std::pair<HMono, HMono>, HCoeff> cache;
  auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  HCoeff r = normalize_atoms(merge(to_atoms(x), to_atoms(y)));
  cache.emplace(key, r);
  return r;
}

std::string pow_str(const std::string& v, Int k) {
  return k == 1 ? v : v + "^" + std::to_string(k);
}

}  // namespace

GradingRO2 HMono::grading() const {
  switch (kind) {
    case Kind::Ex: return {checked_mul(-2, q), checked_add(p, checked_mul(2, q))};
    case Kind::Kappa: return {0, 0};
    case Kind::U: return {0, checked_mul(-2, p)};
    case Kind::T: return {p, -p};
  }
  return {};
}

bool HMono::torsion() const {
  return (kind == Kind::Ex && p >= 1 && q >= 1) || (kind == Kind::T && p % 2 != 0);
}

std::string HMono::str() const {
  switch (kind) {
    case Kind::Ex: {
      if (p == 0 && q == 0) return "1";
      std::string s;
      if (p != 0) s += pow_str("e", p);
      if (q != 0) s += (s.empty() ? "" : "*") + pow_str("xi", q);
      return s;
    }
    case Kind::Kappa: return "kappa";
    case Kind::U: return "u[" + std::to_string(p) + "]";
    case Kind::T: return "t[" + std::to_string(p) + "]";
  }
  return "?";
}

std::string Atoms::str() const {
  std::vector<std::string> parts;
  if (a) parts.push_back(pow_str("e", a));
  if (b) parts.push_back(pow_str("xi", b));
  if (kappa) parts.push_back(pow_str("kappa", kappa));
  if (g) parts.push_back(pow_str("g", g));
  for (Int n : u) parts.push_back("u[" + std::to_string(n) + "]");
  for (Int n : t) parts.push_back("t[" + std::to_string(n) + "]");
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

HCoeff::HCoeff(Int c) { add_term({HMono::Kind::Ex, 0, 0}, c); }

HCoeff HCoeff::mono(const HMono& m, Int c) {
  if (m.kind == HMono::Kind::Ex && (m.p < 0 || m.q < 0))
    throw FragmentError("negative exponent on e or xi");
  if (m.kind == HMono::Kind::U && m.p < 1) throw FragmentError("u[n] needs n >= 1");
  if (m.kind == HMono::Kind::T && m.p < 2) throw FragmentError("t[n] needs n >= 2");
  HCoeff r;
  r.add_term(m, c);
  return r;
}

HCoeff HCoeff::g() {
  Atoms at;
  at.g = 1;
  return normalize_atoms(at);
}

HCoeff HCoeff::u(Int n) {
  if (n == 0) return kappa();
  return mono({HMono::Kind::U, n, 0});
}

HCoeff HCoeff::t(Int n) { return mono({HMono::Kind::T, n, 0}); }

HCoeff HCoeff::from_atoms(const Atoms& at) { return normalize_atoms(at); }

void HCoeff::add_term(const HMono& m, Int c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.grading() != m.grading())
    throw GradingMismatch("mixed-grading coefficient: " + str() + " and " + m.str());
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) it->second = checked_add(it->second, c);
  if (m.torsion()) it->second = mod_pos(it->second, 2);
  if (it->second == 0) terms_.erase(it);
}

std::optional<GradingRO2> HCoeff::grading() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.grading();
}

std::optional<Int> HCoeff::as_integer() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_.begin()->first == HMono{}) return terms_.begin()->second;
  return std::nullopt;
}

HCoeff& HCoeff::operator+=(const HCoeff& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HCoeff HCoeff::operator+(const HCoeff& o) const {
  HCoeff r = *this;
  r += o;
  return r;
}

HCoeff HCoeff::operator-() const {
  HCoeff r;
  for (const auto& [m, c] : terms_) r.add_term(m, checked_neg(c));
  return r;
}

HCoeff HCoeff::operator-(const HCoeff& o) const { return *this + (-o); }

HCoeff HCoeff::operator*(const HCoeff& o) const {
  HCoeff r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Int c = checked_mul(c1, c2);
      for (const auto& [m, k] : mono_product(m1, m2).terms_) r.add_term(m, checked_mul(c, k));
    }
  }
  return r;
}

std::string HCoeff::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Int mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m == HMono{}) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += m.str();
    }
  }
  return out;
}

const std::vector<HRule>& h_rules() {
  static const std::vector<HRule> rules = [] {
    std::vector<HRule> r;
    for (const auto& e : rule_table()) r.push_back(e.rule);
    return r;
  }();
  return rules;
}

std::optional<Branches> apply_h_rule(const std::string& name, const Atoms& at) {
  for (const auto& e : rule_table())
    if (e.rule.name == name) return e.fn(at);
  throw std::invalid_argument("unknown coefficient rule " + name);
}

Laurent h_rho_atoms(const Atoms& at) {
  if (at.a > 0 || at.kappa > 0 || !at.u.empty()) return {};
  Laurent r = Laurent::monomial(1, checked_mul(2, at.b));
  for (Int i = 0; i < at.g; ++i) r = r * Laurent::constant(2);
  for (Int n : at.t) r = r * (n % 2 == 0 ? Laurent::monomial(2, -n) : Laurent());
  return r;
}

Laurent h_phi_atoms(const Atoms& at) {
  if (at.b > 0 || at.g > 0 || !at.t.empty()) return {};
  Laurent r = Laurent::monomial(1, at.a);
  for (Int i = 0; i < at.kappa; ++i) r = r * Laurent::constant(2);
  for (Int n : at.u) r = r * Laurent::monomial(2, checked_mul(-2, n));
  return r;
}

Laurent h_rho(const HCoeff& x) {
  Laurent r;
  for (const auto& [m, c] : x.terms()) r += Laurent::constant(c) * h_rho_atoms(to_atoms(m));
  return r;
}

Laurent h_phi(const HCoeff& x) {
  Laurent r;
  for (const auto& [m, c] : x.terms()) r += Laurent::constant(c) * h_phi_atoms(to_atoms(m));
  return r;
}

int h_mod_n(const HCoeff& x) {
  auto it = x.terms().find(HMono{});
  if (it == x.terms().end()) return 0;
  return static_cast<int>(mod_pos(it->second, 2));
}

std::vector<Atoms> h_atom_box() {
  std::vector<std::vector<Int>> us = {{}, {1}, {2}, {1, 1}, {1, 2}, {2, 2}};
  std::vector<std::vector<Int>> ts = {{}};
  for (Int n = 2; n <= 5; ++n) ts.push_back({n});
  for (Int n = 2; n <= 5; ++n)
    for (Int m = n; m <= 5; ++m) ts.push_back({n, m});
  std::vector<Atoms> box;
  for (Int a = 0; a <= 3; ++a)
    for (Int b = 0; b <= 3; ++b)
      for (Int k = 0; k <= 2; ++k)
        for (Int g = 0; g <= 2; ++g)
          for (const auto& u : us)
            for (const auto& t : ts) box.push_back({a, b, k, g, u, t});
  return box;
}

HRuleCheck check_h_rules_homomorphic() {
  HRuleCheck out;
  for (const Atoms& at : h_atom_box()) {
    for (const auto& entry : rule_table()) {
      auto br = entry.fn(at);
      if (!br) continue;
      ++out.instances;
      Laurent rho_rhs, phi_rhs;
      for (const auto& [c, x] : *br) {
        rho_rhs += Laurent::constant(c) * h_rho_atoms(x);
        phi_rhs += Laurent::constant(c) * h_phi_atoms(x);
      }
      if (rho_rhs != h_rho_atoms(at))
        out.failures.push_back(entry.rule.name + " under rho at " + at.str());
      if (phi_rhs != h_phi_atoms(at))
        out.failures.push_back(entry.rule.name + " under phi at " + at.str());
    }
    // Torsion: 2 times a torsion monomial vanishes under both maps.
    if (auto m = normal_mono(at); m && m->torsion()) {
      ++out.instances;
      if (!h_rho_atoms(at).is_zero() || !h_phi_atoms(at).is_zero())
        out.failures.push_back("torsion at " + at.str());
    }
  }
  return out;
}

HConfluenceReport check_h_confluence() {
  HConfluenceReport rep;
  for (const Atoms& at : h_atom_box()) {
    ++rep.monomials;
    std::vector<std::pair<std::string, HCoeff>> results;
    for (const auto& entry : rule_table()) {
      auto br = entry.fn(at);
      if (!br) continue;
      try {
        HCoeff v;
        for (const auto& [c, x] : *br) v += HCoeff(c) * normalize_atoms(x);
        results.emplace_back(entry.rule.name, v);
      } catch (const FragmentError&) {
        ++rep.error_branches;
      }
    }
    for (std::size_t i = 1; i < results.size(); ++i) {
      ++rep.comparisons;
      if (results[i].second != results[0].second)
        rep.failures.push_back(at.str() + ": " + results[0].first + " gives " +
                               results[0].second.str() + ", " + results[i].first + " gives " +
                               results[i].second.str());
    }
  }
  return rep;
}

}  // namespace eqc
