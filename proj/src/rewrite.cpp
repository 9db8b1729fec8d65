// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include "equicohom/rewrite.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace eqc {

GeneratorSet::GeneratorSet(std::string id, std::vector<std::string> names,
                           std::vector<int> weights, std::vector<GradingBT2> gradings)
    : id_(std::move(id)),
      names_(std::move(names)),
      weights_(std::move(weights)),
      gradings_(std::move(gradings)) {
  if (names_.size() > static_cast<std::size_t>(kMaxGens))
    throw std::invalid_argument("too many generators");
  if (weights_.size() != names_.size() || gradings_.size() != names_.size())
    throw std::invalid_argument("generator table size mismatch");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!seen.insert(names_[i]).second) throw std::invalid_argument("duplicate generator " + names_[i]);
    if (weights_[i] < 1) throw std::invalid_argument("generator weight must be >= 1");
  }
}

std::optional<int> GeneratorSet::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void GeneratorSet::check(const Monomial& m) const {
  for (int i = size(); i < kMaxGens; ++i)
    if (m[i] != 0) throw std::invalid_argument("monomial does not belong to generator set " + id_);
}

Int GeneratorSet::weight(const Monomial& m) const {
  Int w = 0;
  for (int i = 0; i < size(); ++i) w = checked_add(w, checked_mul(weights_[i], m[i]));
  return w;
}

GradingBT2 GeneratorSet::grading(const Monomial& m) const {
  GradingBT2 g;
  for (int i = 0; i < size(); ++i)
    if (m[i] != 0) g = g + gradings_[i].scaled(m[i]);
  return g;
}

std::strong_ordering GeneratorSet::compare(const Monomial& a, const Monomial& b) const {
  check(a);
  check(b);
  Int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa <=> wb;
  for (int i = size() - 1; i >= 0; --i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::string GeneratorSet::str(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names_[i];
    if (m[i] != 1) out += "^" + (m[i] < 0 ? "(" + std::to_string(m[i]) + ")" : std::to_string(m[i]));
  }
  return out.empty() ? "1" : out;
}

unsigned worker_count() {
  if (const char* env = std::getenv("EQUICOHOM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace eqc
