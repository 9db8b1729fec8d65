// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <concepts>
#include <map>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equicohom/coeff_rings.hpp"
#include "equicohom/grading.hpp"
#include "equicohom/monomial.hpp"

namespace eqc {

// Ordered generators with weights and gradings. Monomials are ordered by
// weight, then reverse lexicographically: at the last generator where two
// monomials differ, the one with the higher power is smaller.
class GeneratorSet {
 public:
  GeneratorSet(std::string id, std::vector<std::string> names, std::vector<int> weights,
               std::vector<GradingBT2> gradings);

  const std::string& id() const { return id_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int weight(int i) const { return weights_.at(i); }
  const GradingBT2& grading(int i) const { return gradings_.at(i); }
  std::optional<int> index(const std::string& name) const;

  Int weight(const Monomial& m) const;
  GradingBT2 grading(const Monomial& m) const;
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  // Throws if m uses slots beyond this set.
  void check(const Monomial& m) const;
  std::string str(const Monomial& m) const;

 private:
  std::string id_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<GradingBT2> gradings_;
};

// Worker count from EQUICOHOM_THREADS (default: hardware concurrency).
unsigned worker_count();
// Runs fn(i) for i in [0, n) on up to worker_count() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class CR>
concept GradedCoeffRing = requires(const CR& r, const typename CR::value_type& v) {
  { r.grading(v) } -> std::same_as<std::optional<GradingBT2>>;
};

// ---- polynomial helpers -------------------------------------------------

template <class CR>
void poly_add_term(const CR& ring, Poly<typename CR::value_type>& p, const Monomial& m,
                   const typename CR::value_type& c) {
  if (ring.is_zero(c)) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
    return;
  }
  it->second = ring.add(it->second, c);
  if (ring.is_zero(it->second)) p.erase(it);
}

template <class CR>
Poly<typename CR::value_type> poly_add(const CR& ring, Poly<typename CR::value_type> a,
                                       const Poly<typename CR::value_type>& b) {
  for (const auto& [m, c] : b) poly_add_term(ring, a, m, c);
  return a;
}

template <class CR>
Poly<typename CR::value_type> poly_neg(const CR& ring, const Poly<typename CR::value_type>& a) {
  Poly<typename CR::value_type> r;
  for (const auto& [m, c] : a) poly_add_term(ring, r, m, ring.neg(c));
  return r;
}

template <class CR>
Poly<typename CR::value_type> poly_sub(const CR& ring, const Poly<typename CR::value_type>& a,
                                       const Poly<typename CR::value_type>& b) {
  return poly_add(ring, a, poly_neg(ring, b));
}

// c * m * p without reduction.
template <class CR>
Poly<typename CR::value_type> poly_scale(const CR& ring, const Poly<typename CR::value_type>& p,
                                         const typename CR::value_type& c, const Monomial& m) {
  Poly<typename CR::value_type> r;
  for (const auto& [pm, pc] : p) poly_add_term(ring, r, pm * m, ring.mul(c, pc));
  return r;
}

template <class CR>
Poly<typename CR::value_type> poly_mul_raw(const CR& ring, const Poly<typename CR::value_type>& a,
                                           const Poly<typename CR::value_type>& b) {
  Poly<typename CR::value_type> r;
  for (const auto& [m1, c1] : a)
    for (const auto& [m2, c2] : b) poly_add_term(ring, r, m1 * m2, ring.mul(c1, c2));
  return r;
}

template <class CR2, class V1, class F>
Poly<typename CR2::value_type> map_coeffs(const CR2& ring, const Poly<V1>& p, F&& f) {
  Poly<typename CR2::value_type> r;
  for (const auto& [m, c] : p) poly_add_term(ring, r, m, f(c));
  return r;
}

// Sum printed in ascending monomial order, e.g. "(1 - kappa)*z00*z10*cw2 + e^2".
template <class CR>
std::string poly_str(const CR& ring, const GeneratorSet& gens,
                     const Poly<typename CR::value_type>& p) {
  if (p.empty()) return "0";
  std::vector<const std::pair<const Monomial, typename CR::value_type>*> terms;
  for (const auto& t : p) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](auto* x, auto* y) { return gens.compare(x->first, y->first) < 0; });
  std::string out;
  for (auto* t : terms) {
    std::string cs = ring.str(t->second);
    bool neg = false;
    if (ring.single_term(t->second) && !cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string body;
    const bool one_mono = t->first.is_one();
    if (!ring.single_term(t->second)) {
      body = "(" + cs + ")";
    } else {
      body = cs;
    }
    if (!one_mono) body = (body == "1") ? gens.str(t->first) : body + "*" + gens.str(t->first);
    if (out.empty()) out = (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out;
}

// ---- rewriting ----------------------------------------------------------

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

template <class CR>
class RewriteSystem {
 public:
  using V = typename CR::value_type;
  using Elem = Poly<V>;

  struct Rule {
    std::string name;
    Monomial lhs;
    Elem rhs;
  };

  struct OverlapResult {
    std::string rule_i, rule_j;
    Monomial lcm;
    Elem nf_i, nf_j;
    bool joined = false;
  };

  struct ConfluenceReport {
    std::vector<OverlapResult> pairs;
    bool pass() const {
      for (const auto& p : pairs)
        if (!p.joined) return false;
      return true;
    }
  };

  static constexpr std::size_t kStepLimit = 50'000'000;

  RewriteSystem(std::shared_ptr<const GeneratorSet> gens, CR ring, std::vector<Rule> rules)
      : gens_(std::move(gens)), ring_(std::move(ring)), rules_(std::move(rules)) {
    for (const auto& r : rules_) {
      gens_->check(r.lhs);
      if (!r.lhs.nonnegative() || r.lhs.is_one())
        throw std::invalid_argument("rule " + r.name + ": bad left-hand side");
      for (const auto& [m, c] : r.rhs) {
        gens_->check(m);
        if (!m.nonnegative()) throw std::invalid_argument("rule " + r.name + ": negative exponent");
        if (gens_->compare(m, r.lhs) >= 0)
          throw std::invalid_argument("rule " + r.name + ": rhs monomial " + gens_->str(m) +
                                      " does not precede " + gens_->str(r.lhs));
        if constexpr (GradedCoeffRing<CR>) {
          auto cg = ring_.grading(c);
          if (cg && *cg + gens_->grading(m) != gens_->grading(r.lhs))
            throw std::invalid_argument("rule " + r.name + ": rhs grading differs from lhs");
        }
      }
    }
  }

  const GeneratorSet& gens() const { return *gens_; }
  std::shared_ptr<const GeneratorSet> gens_ptr() const { return gens_; }
  const CR& ring() const { return ring_; }
  const std::vector<Rule>& rules() const { return rules_; }

  const Rule* find_rule(const Monomial& m) const {
    for (const auto& r : rules_)
      if (r.lhs.divides(m)) return &r;
    return nullptr;
  }
  bool is_normal(const Monomial& m) const { return find_rule(m) == nullptr; }

  // Rewrites the order-greatest reducible monomial until none remain.
  Elem reduce(const Elem& x, std::size_t* steps_out = nullptr) const {
    auto cmp = [this](const Monomial& a, const Monomial& b) { return gens_->compare(a, b) < 0; };
    std::map<Monomial, V, decltype(cmp)> work(cmp);
    for (const auto& [m, c] : x) work.emplace(m, c);
    Elem out;
    std::size_t steps = 0;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      Monomial m = it->first;
      V c = std::move(it->second);
      work.erase(it);
      const Rule* r = find_rule(m);
      if (!r) {
        out.emplace(m, std::move(c));
        continue;
      }
      if (++steps > kStepLimit) throw ResourceError("reduction step limit exceeded");
      Monomial q = m / r->lhs;
      for (const auto& [rm, rc] : r->rhs) {
        V v = ring_.mul(c, rc);
        if (ring_.is_zero(v)) continue;
        Monomial nm = rm * q;
        auto jt = work.find(nm);
        if (jt == work.end()) {
          work.emplace(nm, std::move(v));
        } else {
          jt->second = ring_.add(jt->second, v);
          if (ring_.is_zero(jt->second)) work.erase(jt);
        }
      }
    }
    if (steps_out) *steps_out = steps;
    return out;
  }

  Elem mul(const Elem& a, const Elem& b) const { return reduce(poly_mul_raw(ring_, a, b)); }
  Elem add(const Elem& a, const Elem& b) const { return poly_add(ring_, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly_sub(ring_, a, b); }
  Elem neg(const Elem& a) const { return poly_neg(ring_, a); }
  Elem pow(const Elem& a, int k) const {
    Elem r = constant(ring_.one());
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  Elem constant(const V& c) const {
    Elem r;
    poly_add_term(ring_, r, Monomial{}, c);
    return r;
  }
  Elem term(const V& c, const Monomial& m) const {
    Elem r;
    poly_add_term(ring_, r, m, c);
    return reduce(r);
  }
  Elem gen(int i) const { return term(ring_.one(), Monomial::var(i)); }
  Elem gen(const std::string& name) const {
    auto i = gens_->index(name);
    if (!i) throw std::invalid_argument("unknown generator " + name);
    return gen(*i);
  }

  std::string str(const Elem& x) const { return poly_str(ring_, *gens_, x); }

  // Grading of a homogeneous element; nullopt for zero.
  std::optional<GradingBT2> grading(const Elem& x) const
    requires GradedCoeffRing<CR>
  {
    std::optional<GradingBT2> g;
    for (const auto& [m, c] : x) {
      auto cg = ring_.grading(c);
      if (!cg) continue;
      GradingBT2 t = *cg + gens_->grading(m);
      if (g && *g != t) throw GradingMismatch("inhomogeneous element " + str(x));
      g = t;
    }
    return g;
  }

  // Rule pairs (i < j) whose left-hand sides share a variable, with the lcm.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Monomial>> overlaps() const {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Monomial>> out;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      for (std::size_t j = i + 1; j < rules_.size(); ++j)
        if (!gcd(rules_[i].lhs, rules_[j].lhs).is_one())
          out.push_back({{i, j}, lcm(rules_[i].lhs, rules_[j].lhs)});
    return out;
  }

  Elem one_step(std::size_t i, const Monomial& m) const {
    return poly_scale(ring_, rules_[i].rhs, ring_.one(), m / rules_[i].lhs);
  }

  ConfluenceReport check_confluence() const {
    auto ov = overlaps();
    ConfluenceReport rep;
    rep.pairs.resize(ov.size());
    parallel_for(ov.size(), [&](std::size_t k) {
      auto [ij, l] = ov[k];
      OverlapResult& r = rep.pairs[k];
      r.rule_i = rules_[ij.first].name;
      r.rule_j = rules_[ij.second].name;
      r.lcm = l;
      r.nf_i = reduce(one_step(ij.first, l));
      r.nf_j = reduce(one_step(ij.second, l));
      r.joined = r.nf_i == r.nf_j;
    });
    return rep;
  }

 private:
  std::shared_ptr<const GeneratorSet> gens_;
  CR ring_;
  std::vector<Rule> rules_;
};

// Normal forms of a rewrite system, used as coefficients of another system.
template <class CR>
struct PolyRing {
  using value_type = Poly<typename CR::value_type>;
  std::shared_ptr<const RewriteSystem<CR>> sys;

  value_type zero() const { return {}; }
  value_type one() const { return sys->constant(sys->ring().one()); }
  value_type from_int(Int c) const { return sys->constant(sys->ring().from_int(c)); }
  value_type add(const value_type& a, const value_type& b) const { return sys->add(a, b); }
  value_type neg(const value_type& a) const { return sys->neg(a); }
  value_type mul(const value_type& a, const value_type& b) const { return sys->mul(a, b); }
  bool is_zero(const value_type& a) const { return a.empty(); }
  bool single_term(const value_type& a) const {
    return a.size() == 1 && sys->ring().single_term(a.begin()->second);
  }
  std::string str(const value_type& a) const { return sys->str(a); }
  std::optional<GradingBT2> grading(const value_type& a) const
    requires GradedCoeffRing<CR>
  {
    return sys->grading(a);
  }
};

// Same generators and rules with coefficients pushed through f.
template <class CR2, class CR1, class F>
RewriteSystem<CR2> base_change(const RewriteSystem<CR1>& sys, CR2 ring, F&& f) {
  std::vector<typename RewriteSystem<CR2>::Rule> rules;
  for (const auto& r : sys.rules()) rules.push_back({r.name, r.lhs, map_coeffs(ring, r.rhs, f)});
  return RewriteSystem<CR2>(sys.gens_ptr(), std::move(ring), std::move(rules));
}

}  // namespace eqc
