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

#include <gtest/gtest.h>

#include "hyperrec/errors.h"
#include "hyperrec/global_profile.h"
#include "hyperrec/growth.h"
#include "hyperrec/local_profile.h"

namespace hyperrec {
namespace {

TEST(Hypergeom, FullSampleIsForced) {
  EXPECT_EQ(hypergeom_pmf(5, 2, 1, 5, 2, 1), 1);
  EXPECT_EQ(hypergeom_pmf(5, 2, 1, 5, 1, 1), 0);
}

TEST(Hypergeom, NormalizesAndHasHypergeometricMean) {
  for (std::int64_t tau = 1; tau <= 9; ++tau) {
    for (std::int64_t n1 = 0; n1 <= tau; ++n1) {
      for (std::int64_t n2 = 0; n1 + n2 <= tau; ++n2) {
        for (std::int64_t s = 0; s <= tau; ++s) {
          Rational total(0), mean1(0), mean2(0);
          for (std::int64_t q1 = 0; q1 <= s; ++q1) {
            for (std::int64_t q2 = 0; q1 + q2 <= s; ++q2) {
              const Rational p = hypergeom_pmf(tau, n1, n2, s, q1, q2);
              total += p;
              mean1 += p * q1;
              mean2 += p * q2;
            }
          }
          EXPECT_EQ(total, 1);
          EXPECT_EQ(mean1, make_rational(n1 * s, tau));
          EXPECT_EQ(mean2, make_rational(n2 * s, tau));
        }
      }
    }
  }
  Rational mean(0);
  for (std::int64_t q = 0; q <= 2; ++q) mean += q * hypergeom_pmf(5, 2, 0, 2, q, 0);
  EXPECT_EQ(mean, make_rational(4, 5));
}

TEST(Hypergeom, RejectsNegativeArguments) {
  EXPECT_THROW(hypergeom_pmf(-1, 0, 0, 0, 0, 0), DomainError);
  EXPECT_THROW(hypergeom_pmf(5, -1, 0, 2, 0, 0), DomainError);
  EXPECT_THROW(hypergeom_pmf(5, 3, 3, 2, 0, 0), DomainError);
  EXPECT_EQ(hypergeom_pmf(5, 1, 1, 2, -1, 0), 0);
}

TEST(Dp, InitialAndFirstStep) {
  const auto three = dp_joint_distribution(3, 0);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].mass.size(), 1u);
  EXPECT_EQ(three[0].mass.at({3, 0}), 1);
  const auto two = dp_joint_distribution(2, 1);
  EXPECT_EQ(two[1].mass.size(), 1u);
  EXPECT_EQ(two[1].mass.at({2, 1}), 1);
}

TEST(Dp, MassConservationAndSupport) {
  for (int theta : {2, 3, 5}) {
    for (const auto& dist : dp_joint_distribution(theta, 25)) {
      EXPECT_EQ(dist.total(), 1);
      for (const auto& [state, p] : dist.mass) {
        EXPECT_GT(p, 0);
        if (dist.n >= 1) {
          EXPECT_GE(state.first, 1u);
        }
        EXPECT_LE(state.first + state.second, dist.n + theta);
      }
    }
  }
}

TEST(Dp, ChapmanKolmogorov) {
  for (int theta : {2, 3}) {
    const auto dp = dp_joint_distribution(theta, 2);
    const JointDistribution twice = dp_step(dp_step(dp[0]));
    EXPECT_EQ(twice.mass, dp[2].mass);
  }
}

TEST(Dp, MomentsMatchSmallCaseRecurrences) {
  const auto dp = dp_joint_distribution(2, 3);
  const JointMoments m = joint_moments(dp[3]);
  const GlobalMoments g = second_moments_recurrence(2, 3);
  EXPECT_EQ(m.e1, g.e1);
  EXPECT_EQ(m.e2, g.e2);
  EXPECT_EQ(m.e11, g.e11);
  EXPECT_EQ(m.e12, g.e12);
  EXPECT_EQ(m.e22, g.e22);
}

TEST(Dp, Budget) {
  EXPECT_THROW(dp_joint_distribution(2, 31), CapacityError);
  EXPECT_NO_THROW(dp_joint_distribution(2, 35, 40));
}

TEST(Histories, CountsAndProbabilities) {
  const HistoryEnsemble one = enumerate_histories(2, 1);
  ASSERT_EQ(one.outcomes.size(), 2u);
  for (const auto& o : one.outcomes) EXPECT_EQ(o.probability, make_rational(1, 2));

  const HistoryEnsemble two = enumerate_histories(3, 2);
  ASSERT_EQ(two.outcomes.size(), 18u);
  for (const auto& o : two.outcomes) EXPECT_EQ(o.probability, make_rational(1, 18));
  EXPECT_EQ(history_count(3, 2), 18);
  EXPECT_EQ(history_count(3, 4), 2700);
}

TEST(Histories, Budget) {
  EXPECT_THROW(enumerate_histories(3, 6), CapacityError);
  EXPECT_THROW(enumerate_histories(3, 4, 100), CapacityError);
}

TEST(Histories, ContainmentMassInEveryOutcome) {
  for (int theta : {2, 3}) {
    for (std::uint64_t n = 0; n <= 4; ++n) {
      const HistoryEnsemble e = enumerate_histories(theta, n);
      Rational total(0);
      for (const auto& o : e.outcomes) {
        std::uint64_t mass = 0;
        for (auto c : o.containment) mass += c;
        EXPECT_EQ(mass, theta * (n + 1));
        total += o.probability;
      }
      EXPECT_EQ(total, 1);
    }
  }
}

TEST(Histories, ProfileMarginalMatchesDp) {
  for (int theta : {2, 3}) {
    const auto dp = dp_joint_distribution(theta, 4);
    for (std::uint64_t n = 0; n <= 4; ++n) {
      EXPECT_EQ(profile_marginal(enumerate_histories(theta, n)).mass, dp[n].mass)
          << theta << " " << n;
    }
  }
}

TEST(Histories, LocalMarginalsMatchExactPmf) {
  const HistoryEnsemble two = enumerate_histories(2, 2);
  const LocalPmf pmf = local_marginal_from_histories(two, 1);
  EXPECT_EQ(pmf.at(1), make_rational(2, 3));
  EXPECT_EQ(pmf.at(2), make_rational(1, 3));
  const LocalPmf last = local_marginal_from_histories(two, 2);
  ASSERT_EQ(last.support_max(), 1u);
  EXPECT_EQ(last.at(1), 1);

  for (int theta : {2, 3}) {
    for (std::uint64_t n = 0; n <= 4; ++n) {
      const HistoryEnsemble e = enumerate_histories(theta, n);
      for (std::uint64_t k = 0; k <= n; ++k) {
        EXPECT_EQ(local_marginal_from_histories(e, k).probabilities,
                  exact_pmf(theta, n, k).probabilities)
            << theta << " " << n << " " << k;
      }
    }
  }
  EXPECT_THROW(local_marginal_from_histories(two, 3), RangeError);
}

TEST(Histories, MatchesInjectedGrowth) {
  // Replaying one enumerated history through the growth process gives the
  // same containment profile.
  const HistoryEnsemble e = enumerate_histories(3, 2);
  TreeState state = init_tree(3);
  DrawSource draws = DrawSource::injected({{0, 1}, {2, 3}});
  grow(state, draws);
  grow(state, draws);
  const std::vector<std::uint64_t> expected(state.containment().begin(),
                                            state.containment().end());
  bool found = false;
  for (const auto& o : e.outcomes) found = found || o.containment == expected;
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace hyperrec
