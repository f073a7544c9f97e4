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

// Seeded Monte Carlo over many independent replicates. Replicate i draws
// from its own mt19937_64 seeded with replicate_seed(master_seed, i), and
// results are stored by replicate index, so output does not depend on the
// number of worker threads.

#ifndef HYPERREC_MONTECARLO_H_
#define HYPERREC_MONTECARLO_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperrec/global_profile.h"
#include "hyperrec/growth.h"
#include "hyperrec/rational.h"
#include "hyperrec/stats.h"

namespace hyperrec {

struct SimConfig {
  int theta = 2;
  std::uint64_t n = 0;
  std::uint64_t replicates = 1;
  std::uint64_t master_seed = 0;
  std::optional<std::uint64_t> tracked_vertex;
  bool record_martingale = false;
  unsigned threads = 1;
};

// Throws ParameterError for theta < 2, replicates == 0 or a tracked vertex
// beyond n.
void validate(const SimConfig& config);

// splitmix64 of the master seed mixed with the replicate index.
std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t index);

struct LocalSample {
  int theta = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::vector<std::uint64_t> values;  // C_{n,k} per replicate
  std::vector<std::uint64_t> counts;  // counts[r - 1] = #{C = r}, r = 1..n-k+1
  double mean = 0.0;
  double variance = 0.0;  // unbiased
};

// C_{n,k} = 1 + sum of independent indicators, the step-i indicator having
// probability (theta-1)/(i-1+theta); no tree is grown. Successes are
// sampled one at a time by inverting the law of the gap to the next one,
// which telescopes to prod_{m=1}^{theta-1} (i+m)/(j+m), so a replicate costs
// O(C_{n,k}) draws rather than O(n). Requires tracked_vertex.
LocalSample run_local(const SimConfig& config);

// C_{n,k} read off fully grown trees; the reference implementation for
// run_local.
LocalSample run_local_full_tree(const SimConfig& config);

struct GlobalSample {
  int theta = 0;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> x1;
  std::vector<std::uint64_t> x2;
  std::vector<Rational> martingale;  // M_n per replicate when recorded
  double mean1 = 0, mean2 = 0;
  double var1 = 0, var2 = 0, cov12 = 0;  // unbiased
};

GlobalSample run_global(const SimConfig& config);

// Signature of a martingale factor provider; swapped in tests to check that
// a perturbed transform is detected.
using FactorFn = std::function<MartingaleFactors(int theta, std::uint64_t n)>;

// For each tree, the exact E[M_{j} | state at age j-1] from the
// hypergeometric law of the number of recruited level-1 vertices, compared
// with M_{j-1} as rationals. exact_pass iff every state agrees.
TestReport martingale_onestep_check(const std::vector<TreeState>& states,
                                    const FactorFn& factors = martingale_factors);

// `count` trees at ages spread over 0..max_age, grown from seeds derived
// from master_seed.
std::vector<TreeState> seeded_states(int theta, std::uint64_t max_age,
                                     std::uint64_t count,
                                     std::uint64_t master_seed);

// Chi-square of (C_{n,k} - 1), k = round(alpha n), against
// Poisson((theta-1) ln(1/alpha)). The last cell collects the Poisson tail
// beyond the largest observed value.
TestReport poisson_phase_check(int theta, const Rational& alpha,
                               std::uint64_t n, std::uint64_t replicates,
                               std::uint64_t master_seed,
                               double alpha_level = kDefaultAlpha);

// Frequencies of the recruited subset in one step from a fixed tree of
// `tau` vertices (grown by a fixed injected history), against the uniform
// law over all C(tau, theta-1) subsets.
TestReport subset_uniformity_check(int theta, std::uint64_t tau,
                                   std::uint64_t replicates,
                                   std::uint64_t master_seed);

// Chi-square of the full-tree law of C_{n,k} against the indicator-sum law
// (run_local with a different seed stream), as a two-sample homogeneity
// test.
TestReport shortcut_vs_tree_check(int theta, std::uint64_t n, std::uint64_t k,
                                  std::uint64_t replicates,
                                  std::uint64_t master_seed);

}  // namespace hyperrec

#endif  // HYPERREC_MONTECARLO_H_
