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

#include "hyperrec/montecarlo.h"

#include <gtest/gtest.h>

#include <cmath>

#include "hyperrec/errors.h"
#include "hyperrec/local_profile.h"

namespace hyperrec {
namespace {

SimConfig local_config(int theta, std::uint64_t n, std::uint64_t k,
                       std::uint64_t replicates, std::uint64_t seed) {
  SimConfig c;
  c.theta = theta;
  c.n = n;
  c.tracked_vertex = k;
  c.replicates = replicates;
  c.master_seed = seed;
  return c;
}

TEST(Config, Validation) {
  SimConfig c;
  c.theta = 1;
  EXPECT_THROW(validate(c), ParameterError);
  c.theta = 3;
  c.replicates = 0;
  EXPECT_THROW(validate(c), ParameterError);
  c.replicates = 1;
  c.n = 3;
  c.tracked_vertex = 4;
  EXPECT_THROW(validate(c), ParameterError);
  EXPECT_THROW(run_local(c), ParameterError);
  c.tracked_vertex.reset();
  EXPECT_THROW(run_local(c), ParameterError);
}

TEST(Seeds, DistinctAndStable) {
  EXPECT_NE(replicate_seed(42, 0), replicate_seed(42, 1));
  EXPECT_NE(replicate_seed(42, 0), replicate_seed(43, 0));
  EXPECT_EQ(replicate_seed(42, 7), replicate_seed(42, 7));
}

TEST(RunLocal, DegenerateVertex) {
  const LocalSample s = run_local(local_config(3, 5, 5, 100, 1));
  for (auto v : s.values) EXPECT_EQ(v, 1u);
  EXPECT_EQ(s.counts, std::vector<std::uint64_t>{100});
}

TEST(RunLocal, MatchesExactPmf) {
  const LocalSample s = run_local(local_config(3, 200, 10, 100000, 42));
  const TestReport chi = chi_square_gof(s.counts, exact_pmf(3, 200, 10));
  EXPECT_GT(*chi.p_value, 1e-3);
  const TestReport z = moment_ztest(s.mean, to_double(exact_mean(3, 200, 10)),
                                    to_double(exact_variance(3, 200, 10)),
                                    100000);
  EXPECT_TRUE(z.passed) << z.statistic;
}

TEST(RunLocal, LargeAgeMatchesIndicatorConvolution) {
  // theta = 4, n = 10^6: the exact pmf is out of reach, so the law comes
  // from convolving the indicators in double precision.
  constexpr int kTheta = 4;
  constexpr std::uint64_t kN = 1000000, kK = 3;
  constexpr std::size_t kCells = 120;
  std::vector<double> law(kCells, 0.0);
  law[0] = 1.0;
  for (std::uint64_t i = kK + 1; i <= kN; ++i) {
    const double p = (kTheta - 1.0) / (static_cast<double>(i) + kTheta - 1.0);
    law[kCells - 1] += law[kCells - 2] * p;
    for (std::size_t r = kCells - 2; r >= 1; --r) {
      law[r] = law[r] * (1.0 - p) + law[r - 1] * p;
    }
    law[0] *= 1.0 - p;
  }
  const LocalSample s = run_local(local_config(kTheta, kN, kK, 50000, 3));
  std::vector<std::uint64_t> observed(kCells, 0);
  for (std::size_t r = 0; r < s.counts.size(); ++r) {
    observed[std::min(r, kCells - 1)] += s.counts[r];
  }
  EXPECT_GT(*chi_square_gof(observed, law).p_value, 1e-3);
}

TEST(RunLocal, SmallCaseMoments) {
  const LocalSample s = run_local(local_config(2, 2, 1, 100000, 42));
  const TestReport z = moment_ztest(s.mean, 4.0 / 3.0, 2.0 / 9.0, 100000);
  EXPECT_TRUE(z.passed) << z.statistic;
}

TEST(RunLocal, ThreadCountDoesNotChangeResults) {
  SimConfig c = local_config(3, 300, 3, 5000, 9);
  const LocalSample serial = run_local(c);
  c.threads = 4;
  const LocalSample parallel = run_local(c);
  EXPECT_EQ(serial.values, parallel.values);
  EXPECT_EQ(serial.mean, parallel.mean);

  SimConfig g;
  g.theta = 3;
  g.n = 100;
  g.replicates = 300;
  g.master_seed = 5;
  const GlobalSample gs = run_global(g);
  g.threads = 3;
  const GlobalSample gp = run_global(g);
  EXPECT_EQ(gs.x1, gp.x1);
  EXPECT_EQ(gs.x2, gp.x2);
}

TEST(RunGlobal, DeterministicFirstStep) {
  SimConfig c;
  c.theta = 2;
  c.n = 1;
  c.replicates = 50;
  c.master_seed = 3;
  c.record_martingale = true;
  const GlobalSample s = run_global(c);
  for (std::uint64_t r = 0; r < 50; ++r) {
    EXPECT_EQ(s.x1[r], 2u);
    EXPECT_EQ(s.x2[r], 1u);
    EXPECT_EQ(s.martingale[r], 2);
  }
}

TEST(RunGlobal, MeansAgreeWithExactMoments) {
  SimConfig c;
  c.theta = 3;
  c.n = 200;
  c.replicates = 4000;
  c.master_seed = 11;
  const GlobalSample s = run_global(c);
  const GlobalMoments m = second_moments_recurrence(3, 200);
  const CovMatrix cov = exact_cov(m);
  EXPECT_TRUE(moment_ztest(s.mean1, to_double(m.e1), to_double(cov.var1), 4000).passed);
  EXPECT_TRUE(moment_ztest(s.mean2, to_double(m.e2), to_double(cov.var2), 4000).passed);
  EXPECT_NEAR(s.var1 / to_double(cov.var1), 1.0, 0.1);
}

TEST(Martingale, OneStepHoldsOnSeededStates) {
  for (int theta : {2, 3, 4}) {
    const std::vector<TreeState> init{init_tree(theta)};
    EXPECT_TRUE(martingale_onestep_check(init).passed);
  }
  const auto states = seeded_states(3, 50, 100, 42);
  const TestReport rep = martingale_onestep_check(states);
  EXPECT_TRUE(*rep.exact_pass);
  EXPECT_EQ(rep.details.at("states"), 100.0);
}

TEST(Martingale, PerturbedFactorsFail) {
  const auto states = seeded_states(3, 50, 100, 42);
  const FactorFn perturbed = [](int theta, std::uint64_t n) {
    MartingaleFactors f = martingale_factors(theta, n);
    f.r += 1;
    return f;
  };
  const TestReport rep = martingale_onestep_check(states, perturbed);
  EXPECT_FALSE(*rep.exact_pass);
  EXPECT_GT(rep.statistic, 90.0);
}

TEST(Uniformity, RecruitedSubsets) {
  const TestReport rep = subset_uniformity_check(3, 6, 100000, 42);
  EXPECT_EQ(rep.details.at("subsets"), 15.0);
  EXPECT_TRUE(rep.passed) << *rep.p_value << " " << rep.details.at("max_abs_z");
  // Large subsets go through the shuffle sampler.
  const TestReport wide = subset_uniformity_check(11, 13, 20000, 42);
  EXPECT_EQ(wide.details.at("subsets"), 286.0);
  EXPECT_GT(*wide.p_value, 1e-3);
}

TEST(Shortcut, MatchesFullTree) {
  const TestReport rep = shortcut_vs_tree_check(3, 50, 5, 20000, 42);
  EXPECT_GT(*rep.p_value, 1e-3);
}

TEST(PoissonPhase, RunsAndConcentratesNearOne) {
  const TestReport rep =
      poisson_phase_check(2, make_rational(1, 2), 4000, 20000, 42);
  EXPECT_GT(*rep.p_value, 1e-3);
  EXPECT_EQ(rep.details.at("k"), 2000.0);
  const TestReport late =
      poisson_phase_check(2, make_rational(19, 20), 4000, 20000, 42);
  EXPECT_LT(late.details.at("sample_mean_minus_1"), 0.06);
}

}  // namespace
}  // namespace hyperrec
