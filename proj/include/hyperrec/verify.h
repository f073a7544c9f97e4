// Copyright 2026 The hyperrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// The acceptance checks, one function per numbered criterion. Each returns
// a CriterionResult whose verdict is the conjunction of its gating checks;
// diagnostics are reported alongside but never change the verdict.
//
// Criteria 1-6 and 8 use exact arithmetic only and draw no random numbers.
// The rest are seeded simulations and reproduce bit for bit for a given
// seed at any thread count.

#ifndef HYPERREC_VERIFY_H_
#define HYPERREC_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hyperrec/io.h"
#include "hyperrec/stats.h"

namespace hyperrec {

inline constexpr int kCriterionCount = 13;
inline constexpr std::uint64_t kDefaultVerifySeed = 42;

enum class Suite { kExact, kStatistical, kAll };

// "exact", "statistical" or "all"; throws ParameterError otherwise.
Suite parse_suite(const std::string& text);
std::string to_string(Suite suite);

// Criterion ids in a suite, ascending.
std::vector<int> suite_criteria(Suite suite);
bool is_exact_criterion(int id);

struct VerifyOptions {
  std::uint64_t seed = kDefaultVerifySeed;
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool exact = true;  // no randomness consumed
  bool passed = false;
  std::vector<TestReport> checks;
  std::vector<TestReport> diagnostics;
};

// Throws RangeError for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id, const VerifyOptions& options = {});

// {"criterion", "name", "suite", "passed", "checks", "diagnostics"}; no
// timings, so equal inputs give equal bytes.
Json criterion_json(const CriterionResult& result);

}  // namespace hyperrec

#endif  // HYPERREC_VERIFY_H_
