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

// Brute-force ground truth for small trees: the exact law of
// (X_{n,1}, X_{n,2}) by forward dynamic programming over the Markov chain,
// the trivariate hypergeometric pmf that drives it, and exhaustive
// enumeration of growth histories.
//
// (X_{n,1}, X_{n,2}) is Markov on its own: a step recruits a uniform
// (theta-1)-subset, so how many level-1 and level-2 vertices it hits depends
// only on those two counts and tau, and every vertex above level 2 is
// interchangeable for the next step.

#ifndef HYPERREC_ORACLE_H_
#define HYPERREC_ORACLE_H_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hyperrec/local_profile.h"
#include "hyperrec/rational.h"

namespace hyperrec {

// P(Q1 = q1, Q2 = q2) when s of tau items are drawn without replacement and
// n1, n2 items carry the two marks:
//   C(n1, q1) C(n2, q2) C(tau - n1 - n2, s - q1 - q2) / C(tau, s).
// Zero for infeasible (q1, q2). Throws DomainError for negative arguments,
// n1 + n2 > tau or s > tau.
Rational hypergeom_pmf(std::int64_t tau, std::int64_t n1, std::int64_t n2,
                       std::int64_t s, std::int64_t q1, std::int64_t q2);

using ProfileState = std::pair<std::uint64_t, std::uint64_t>;  // (x1, x2)

struct JointDistribution {
  int theta = 0;
  std::uint64_t n = 0;
  std::map<ProfileState, Rational> mass;

  Rational total() const;
};

struct JointMoments {
  Rational e1, e2, e11, e12, e22;
};

JointMoments joint_moments(const JointDistribution& dist);

// Expectation of f(x1, x2) under the distribution.
template <typename F>
Rational expectation(const JointDistribution& dist, F&& f) {
  Rational sum(0);
  for (const auto& [state, p] : dist.mass) sum += p * f(state.first, state.second);
  return sum;
}

inline constexpr std::uint64_t kDefaultDpMaxAge = 30;
inline constexpr std::uint64_t kDefaultHistoryBudget = 100000;

// Law at age n+1 from the law at age n. Zero-mass states are dropped.
JointDistribution dp_step(const JointDistribution& dist);

// Laws at ages 0..n_max. Throws CapacityError when n_max > max_age.
std::vector<JointDistribution> dp_joint_distribution(
    int theta, std::uint64_t n_max, std::uint64_t max_age = kDefaultDpMaxAge);

struct HistoryOutcome {
  std::vector<std::uint64_t> containment;  // per vertex index
  Rational probability;
};

struct HistoryEnsemble {
  int theta = 0;
  std::uint64_t n = 0;
  std::vector<HistoryOutcome> outcomes;
};

// Number of distinct growth histories of age n: prod_j C(j - 1 + theta, theta - 1).
BigInt history_count(int theta, std::uint64_t n);

// Every growth history of age n with its probability, subsets taken in
// lexicographic order at each step. Throws CapacityError when
// history_count(theta, n) > budget.
HistoryEnsemble enumerate_histories(int theta, std::uint64_t n,
                                    std::uint64_t budget = kDefaultHistoryBudget);

// Marginal law of C_{n,k}. Throws RangeError for k > ensemble.n.
LocalPmf local_marginal_from_histories(const HistoryEnsemble& ensemble,
                                       std::uint64_t k);

// Marginal law of (X_{n,1}, X_{n,2}).
JointDistribution profile_marginal(const HistoryEnsemble& ensemble);

}  // namespace hyperrec

#endif  // HYPERREC_ORACLE_H_
