// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace eqc {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  // Fails for a documented reason (see README); does not affect the exit code.
  bool known_unattainable = false;
  std::vector<std::string> notes;
};

constexpr int kCriterionCount = 14;

CriterionResult run_criterion(int id);
// Runs the given criteria (all when empty) in order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

// 0 when every failure is a documented known-unattainable one and none of
// those unexpectedly passes; 1 otherwise.
int acceptance_exit_code(const std::vector<CriterionResult>& results);

// One PASS/FAIL line per criterion followed by indented notes.
std::string format_report(const std::vector<CriterionResult>& results, bool with_notes = true);

}  // namespace eqc
