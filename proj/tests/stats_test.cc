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

#include "hyperrec/stats.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperrec/errors.h"

namespace hyperrec {
namespace {

TEST(ChiSquare, ProportionalDataGivesZero) {
  const std::vector<std::uint64_t> obs{20, 50, 30};
  const std::vector<double> p{0.2, 0.5, 0.3};
  const TestReport rep = chi_square_gof(obs, p);
  EXPECT_NEAR(rep.statistic, 0.0, 1e-12);
  EXPECT_NEAR(*rep.p_value, 1.0, 1e-12);
  EXPECT_TRUE(rep.passed);
}

TEST(ChiSquare, TwoBinHandCase) {
  const std::vector<std::uint64_t> obs{60, 40};
  const std::vector<double> p{0.5, 0.5};
  const TestReport rep = chi_square_gof(obs, p);
  EXPECT_DOUBLE_EQ(rep.statistic, 4.0);
  EXPECT_EQ(*rep.dof, 1);
  // P(chi2_1 >= 4) = erfc(sqrt(2)).
  EXPECT_NEAR(*rep.p_value, std::erfc(std::sqrt(2.0)), 1e-12);
}

TEST(ChiSquare, ThreeBinHandCase) {
  const std::vector<std::uint64_t> obs{30, 50, 20};
  const std::vector<double> p{0.25, 0.5, 0.25};
  const TestReport rep = chi_square_gof(obs, p);
  EXPECT_DOUBLE_EQ(rep.statistic, 2.0);
  EXPECT_EQ(*rep.dof, 2);
  EXPECT_NEAR(*rep.p_value, std::exp(-1.0), 1e-12);
}

TEST(ChiSquare, MergesSparseTails) {
  // Expected counts 1, 2, 90, 3, 4 with 100 draws: the first three merge
  // (93), the remaining 7 expected become a second group.
  const std::vector<std::uint64_t> obs{1, 2, 90, 3, 4};
  const std::vector<double> p{0.01, 0.02, 0.90, 0.03, 0.04};
  const TestReport rep = chi_square_gof(obs, p);
  EXPECT_EQ(*rep.dof, 1);
  EXPECT_NEAR(rep.statistic, 0.0, 1e-12);
}

TEST(ChiSquare, DegenerateInputs) {
  const std::vector<std::uint64_t> obs{10};
  const std::vector<double> p{1.0};
  EXPECT_THROW(chi_square_gof(obs, p), DegenerateTestError);
  const std::vector<std::uint64_t> none{0, 0};
  const std::vector<double> half{0.5, 0.5};
  EXPECT_THROW(chi_square_gof(none, half), DegenerateTestError);
  const std::vector<std::uint64_t> few{2, 1};
  EXPECT_THROW(chi_square_gof(few, half), DegenerateTestError);
}

TEST(ChiSquare, SurvivalFunction) {
  EXPECT_NEAR(chi_square_sf(2.0, 2.0), std::exp(-1.0), 1e-14);
  EXPECT_NEAR(chi_square_sf(10.0, 4.0), std::exp(-5.0) * (1 + 5.0), 1e-14);
  EXPECT_EQ(chi_square_sf(0.0, 3.0), 1.0);
}

TEST(ChiSquareTwoSample, IdenticalSamplesGiveZero) {
  const std::vector<std::uint64_t> a{40, 60, 100};
  const TestReport rep = chi_square_two_sample(a, a);
  EXPECT_NEAR(rep.statistic, 0.0, 1e-12);
  EXPECT_EQ(*rep.dof, 2);
}

TEST(ChiSquareTwoSample, HandCase) {
  // Pooled (50, 50) over equal totals: expected 25 everywhere.
  const std::vector<std::uint64_t> a{30, 20};
  const std::vector<std::uint64_t> b{20, 30};
  const TestReport rep = chi_square_two_sample(a, b);
  EXPECT_DOUBLE_EQ(rep.statistic, 4.0);
  EXPECT_EQ(*rep.dof, 1);
}

TEST(Kolmogorov, KnownValues) {
  EXPECT_NEAR(kolmogorov_sf(1.0), 0.26999967167735456, 1e-12);
  EXPECT_NEAR(kolmogorov_sf(1.36), 0.049485876755377876, 1e-12);
  EXPECT_NEAR(kolmogorov_sf(0.5), 0.9639452436648751, 1e-12);
  EXPECT_EQ(kolmogorov_sf(0.0), 1.0);
}

TEST(Ks, HandFixtures) {
  EXPECT_DOUBLE_EQ(ks_standard_normal({0.0}).d, 0.5);
  EXPECT_NEAR(ks_standard_normal({-1.0, 1.0}).d, 0.5 - normal_cdf(-1.0), 1e-15);
  EXPECT_NEAR(ks_standard_normal({-1.0, 1.0}).d, 0.34134474606854293, 1e-12);
}

TEST(Moments, HandFixture) {
  const std::vector<double> x{1, 2, 3, 4, 10};
  const SampleMoments m = sample_moments(x);
  EXPECT_DOUBLE_EQ(m.mean, 4.0);
  EXPECT_DOUBLE_EQ(m.variance, 12.5);
  // Deviations -3, -2, -1, 0, 6: central moments m2 = 10, m3 = 36,
  // m4 = 278.8.
  EXPECT_NEAR(m.skewness, 36.0 / std::pow(10.0, 1.5), 1e-14);
  EXPECT_NEAR(m.excess_kurtosis, 278.8 / 100.0 - 3.0, 1e-14);
}

TEST(Normality, StandardNormalStreamPasses) {
  std::mt19937_64 engine(7);
  std::normal_distribution<double> normal;
  std::vector<double> sample(20000);
  for (double& x : sample) x = normal(engine);
  const TestReport rep = normality_check(sample);
  EXPECT_TRUE(rep.passed) << rep.details.at("skewness") << " "
                          << rep.details.at("excess_kurtosis") << " "
                          << *rep.p_value;
}

TEST(Normality, ShiftedStreamFails) {
  std::mt19937_64 engine(7);
  std::normal_distribution<double> normal(0.2, 1.0);
  std::vector<double> sample(20000);
  for (double& x : sample) x = normal(engine);
  EXPECT_FALSE(normality_check(sample).passed);
}

TEST(Normality, SkewedStreamFails) {
  std::mt19937_64 engine(7);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> sample(5000);
  for (double& x : sample) x = expo(engine) - 1.0;
  const TestReport rep = normality_check(sample);
  EXPECT_FALSE(rep.passed);
  EXPECT_GT(rep.details.at("skewness"), 1.0);
}

TEST(Normality, SmallSampleRejected) {
  const std::vector<double> sample(999, 0.0);
  EXPECT_THROW(normality_check(sample), InsufficientSampleError);
}

TEST(ZTest, Cases) {
  const TestReport zero = moment_ztest(1.5, 1.5, 2.0, 100);
  EXPECT_EQ(zero.statistic, 0.0);
  EXPECT_TRUE(zero.passed);
  const TestReport exact = moment_ztest(1.0, 1.0, 0.0, 100);
  ASSERT_TRUE(exact.exact_pass.has_value());
  EXPECT_TRUE(*exact.exact_pass);
  EXPECT_FALSE(exact.p_value.has_value());
  const TestReport mismatch = moment_ztest(1.1, 1.0, 0.0, 100);
  EXPECT_FALSE(*mismatch.exact_pass);
  const TestReport far = moment_ztest(1.5, 1.0, 1.0, 100);
  EXPECT_DOUBLE_EQ(far.statistic, 5.0);
  EXPECT_FALSE(far.passed);
  EXPECT_THROW(moment_ztest(1.0, 1.0, 1.0, 29), InsufficientSampleError);
}

TEST(Poisson, Pmf) {
  const auto p = poisson_pmf(2.0, 3);
  EXPECT_NEAR(p[0], std::exp(-2.0), 1e-16);
  EXPECT_NEAR(p[3], std::exp(-2.0) * 8 / 6, 1e-16);
}

TEST(Poisson, TvOfPointMassAgainstZeroRate) {
  LocalPmf point;
  point.theta = 3;
  point.probabilities = {Rational(1)};
  EXPECT_DOUBLE_EQ(tv_to_shifted_poisson(point, 0.0), 0.0);
  // All Poisson mass beyond 0 counts as mismatch.
  EXPECT_NEAR(tv_to_shifted_poisson(point, 1.0), 1 - std::exp(-1.0), 1e-15);
}

}  // namespace
}  // namespace hyperrec
