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

#include "hyperrec/oracle.h"

#include <algorithm>
#include <string>

#include "hyperrec/errors.h"
#include "hyperrec/growth.h"

namespace hyperrec {
namespace {

void check_theta(int theta) {
  if (theta < 2) {
    throw ParameterError("theta must be at least 2, got " +
                         std::to_string(theta));
  }
}

// Depth-first walk over all histories; `containment` is the state after
// `age` steps and `weight` its probability.
void walk(int theta, std::uint64_t n, std::vector<std::uint64_t>& containment,
          const Rational& weight, std::vector<HistoryOutcome>& out) {
  const std::uint64_t tau = containment.size();
  if (tau - theta == n) {
    out.push_back({containment, weight});
    return;
  }
  const unsigned s = static_cast<unsigned>(theta - 1);
  const Rational step_weight = weight / Rational(binomial(tau, s));
  std::vector<std::uint64_t> subset(s);
  for (unsigned i = 0; i < s; ++i) subset[i] = i;
  containment.push_back(1);
  while (true) {
    for (std::uint64_t v : subset) ++containment[v];
    walk(theta, n, containment, step_weight, out);
    for (std::uint64_t v : subset) --containment[v];
    // Next subset in lexicographic order.
    int i = static_cast<int>(s) - 1;
    while (i >= 0 && subset[i] == tau - s + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (unsigned j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
  }
  containment.pop_back();
}

}  // namespace

Rational hypergeom_pmf(std::int64_t tau, std::int64_t n1, std::int64_t n2,
                       std::int64_t s, std::int64_t q1, std::int64_t q2) {
  if (tau < 0 || n1 < 0 || n2 < 0 || s < 0) {
    throw DomainError("hypergeometric parameters must be nonnegative");
  }
  if (n1 + n2 > tau || s > tau) {
    throw DomainError("hypergeometric marks or sample exceed population");
  }
  const std::int64_t rest = tau - n1 - n2;
  const std::int64_t q3 = s - q1 - q2;
  if (q1 < 0 || q2 < 0 || q3 < 0 || q1 > n1 || q2 > n2 || q3 > rest) {
    return Rational(0);
  }
  const BigInt num = binomial(n1, q1) * binomial(n2, q2) * binomial(rest, q3);
  return make_rational(num, binomial(tau, s));
}

Rational JointDistribution::total() const {
  Rational sum(0);
  for (const auto& entry : mass) sum += entry.second;
  return sum;
}

JointMoments joint_moments(const JointDistribution& dist) {
  JointMoments m;
  for (const auto& [state, p] : dist.mass) {
    const Rational x1(BigInt(static_cast<unsigned long>(state.first)));
    const Rational x2(BigInt(static_cast<unsigned long>(state.second)));
    m.e1 += p * x1;
    m.e2 += p * x2;
    m.e11 += p * x1 * x1;
    m.e12 += p * x1 * x2;
    m.e22 += p * x2 * x2;
  }
  return m;
}

JointDistribution dp_step(const JointDistribution& dist) {
  const std::int64_t tau = static_cast<std::int64_t>(dist.n) + dist.theta;
  const std::int64_t s = dist.theta - 1;
  JointDistribution next;
  next.theta = dist.theta;
  next.n = dist.n + 1;
  for (const auto& [state, p] : dist.mass) {
    const auto x1 = static_cast<std::int64_t>(state.first);
    const auto x2 = static_cast<std::int64_t>(state.second);
    for (std::int64_t q1 = 0; q1 <= std::min(x1, s); ++q1) {
      for (std::int64_t q2 = 0; q2 <= std::min(x2, s - q1); ++q2) {
        const Rational w = hypergeom_pmf(tau, x1, x2, s, q1, q2);
        if (w == 0) continue;
        const ProfileState target{static_cast<std::uint64_t>(x1 - q1 + 1),
                                  static_cast<std::uint64_t>(x2 - q2 + q1)};
        next.mass[target] += p * w;
      }
    }
  }
  std::erase_if(next.mass, [](const auto& entry) { return entry.second == 0; });
  return next;
}

std::vector<JointDistribution> dp_joint_distribution(int theta,
                                                     std::uint64_t n_max,
                                                     std::uint64_t max_age) {
  check_theta(theta);
  if (n_max > max_age) {
    throw CapacityError("DP age " + std::to_string(n_max) +
                        " exceeds budget " + std::to_string(max_age));
  }
  std::vector<JointDistribution> out;
  out.reserve(n_max + 1);
  JointDistribution start;
  start.theta = theta;
  start.n = 0;
  start.mass[{static_cast<std::uint64_t>(theta), 0}] = 1;
  out.push_back(std::move(start));
  for (std::uint64_t j = 1; j <= n_max; ++j) out.push_back(dp_step(out.back()));
  return out;
}

BigInt history_count(int theta, std::uint64_t n) {
  check_theta(theta);
  BigInt count(1);
  for (std::uint64_t j = 1; j <= n; ++j) {
    count *= binomial(j - 1 + theta, theta - 1);
  }
  return count;
}

HistoryEnsemble enumerate_histories(int theta, std::uint64_t n,
                                    std::uint64_t budget) {
  const BigInt count = history_count(theta, n);
  if (count > BigInt(static_cast<unsigned long>(budget))) {
    throw CapacityError(to_string(count) + " histories exceed budget " +
                        std::to_string(budget));
  }
  HistoryEnsemble ensemble;
  ensemble.theta = theta;
  ensemble.n = n;
  ensemble.outcomes.reserve(count.get_ui());
  std::vector<std::uint64_t> containment(static_cast<std::size_t>(theta), 1);
  walk(theta, n, containment, Rational(1), ensemble.outcomes);
  return ensemble;
}

LocalPmf local_marginal_from_histories(const HistoryEnsemble& ensemble,
                                       std::uint64_t k) {
  if (k > ensemble.n) {
    throw RangeError("label " + std::to_string(k) + " exceeds age " +
                     std::to_string(ensemble.n));
  }
  LocalPmf pmf;
  pmf.theta = ensemble.theta;
  pmf.n = ensemble.n;
  pmf.k = k;
  pmf.probabilities.assign(ensemble.n - k + 1, Rational(0));
  const std::uint64_t index = TreeState::index_of_label(ensemble.theta, k);
  for (const auto& outcome : ensemble.outcomes) {
    pmf.probabilities.at(outcome.containment[index] - 1) += outcome.probability;
  }
  return pmf;
}

JointDistribution profile_marginal(const HistoryEnsemble& ensemble) {
  JointDistribution dist;
  dist.theta = ensemble.theta;
  dist.n = ensemble.n;
  for (const auto& outcome : ensemble.outcomes) {
    std::uint64_t x1 = 0;
    std::uint64_t x2 = 0;
    for (std::uint64_t c : outcome.containment) {
      x1 += c == 1;
      x2 += c == 2;
    }
    dist.mass[{x1, x2}] += outcome.probability;
  }
  return dist;
}

}  // namespace hyperrec
