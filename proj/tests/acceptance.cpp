// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

// Runs the acceptance criteria (all, or the ids given as arguments) and
// prints one PASS/FAIL line per criterion.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "equicohom/verify.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    long id = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || id < 1 || id > eqc::kCriterionCount) {
      std::cerr << "usage: acceptance [criterion ids 1.." << eqc::kCriterionCount << "]\n";
      return 2;
    }
    ids.push_back(static_cast<int>(id));
  }
  auto results = eqc::run_acceptance(ids);
  std::cout << eqc::format_report(results);
  return eqc::acceptance_exit_code(results);
}
