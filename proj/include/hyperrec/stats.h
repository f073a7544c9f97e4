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

// Goodness-of-fit and moment tests used to judge simulated samples against
// exact laws.

#ifndef HYPERREC_STATS_H_
#define HYPERREC_STATS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperrec/local_profile.h"

namespace hyperrec {

// Outcome of one check. A statistical check carries p_value, an exact one
// carries exact_pass; `passed` is the gate verdict in both cases.
struct TestReport {
  std::string name;
  double statistic = 0.0;
  std::optional<std::int64_t> dof;
  std::optional<double> p_value;
  std::optional<bool> exact_pass;
  bool passed = false;
  // Which exact computation supplied the reference values.
  std::string reference;
  // Named diagnostics, e.g. skewness, sample size, gate thresholds.
  std::map<std::string, double> details;
};

inline constexpr double kDefaultAlpha = 1e-3;
inline constexpr double kMinExpectedPerBin = 5.0;

// Pearson chi-square of observed counts against cell probabilities. Adjacent
// cells are merged left to right until each group expects at least 5
// counts; a short remainder joins the last group. The p-value is the upper
// tail of the chi-square law with (groups - 1) degrees of freedom. Throws
// DegenerateTestError when fewer than two groups remain or the total count
// is zero; throws DomainError when the two spans differ in length.
TestReport chi_square_gof(std::span<const std::uint64_t> observed,
                          std::span<const double> probabilities,
                          double alpha = kDefaultAlpha);
TestReport chi_square_gof(std::span<const std::uint64_t> observed,
                          const LocalPmf& exact, double alpha = kDefaultAlpha);

// Two-sample chi-square homogeneity test on a shared set of cells. Cells
// are merged left to right until each group expects at least 5 counts in
// both samples under the pooled law.
TestReport chi_square_two_sample(std::span<const std::uint64_t> first,
                                 std::span<const std::uint64_t> second,
                                 double alpha = kDefaultAlpha);

// Upper tail P(chi2_dof >= x).
double chi_square_sf(double x, double dof);

double normal_cdf(double x);

// Asymptotic Kolmogorov distribution tail P(K > lambda).
double kolmogorov_sf(double lambda);

struct KsResult {
  double d = 0.0;
  double p_value = 1.0;
};

// One-sample Kolmogorov-Smirnov test against the standard normal. The
// p-value uses the asymptotic law at (sqrt(N) + 0.12 + 0.11/sqrt(N)) D.
KsResult ks_standard_normal(std::vector<double> sample);

struct SampleMoments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;  // m3 / m2^1.5
  double excess_kurtosis = 0.0;  // m4 / m2^2 - 3
};

SampleMoments sample_moments(std::span<const double> sample);

struct NormalityGates {
  double max_abs_skew = 0.1;
  double max_abs_excess_kurtosis = 0.2;
  double alpha = kDefaultAlpha;
};

inline constexpr std::uint64_t kMinNormalitySample = 1000;

// Skewness, excess kurtosis and KS distance of an already standardized
// sample. Throws InsufficientSampleError below 1000 values.
TestReport normality_check(std::span<const double> standardized,
                           const NormalityGates& gates = {});

// z = (sample_mean - exact_mean) / sqrt(exact_variance / R); passes when
// |z| <= z_max. With zero variance the check is exact: equal means pass.
// Throws InsufficientSampleError when R < 30.
TestReport moment_ztest(double sample_mean, double exact_mean,
                        double exact_variance, std::uint64_t replicates,
                        double z_max = 4.0);

// Poisson(rate) probabilities for 0..k_max.
std::vector<double> poisson_pmf(double rate, std::uint64_t k_max);

// Total variation distance between an exact pmf on 1..n-k+1 and
// 1 + Poisson(rate), counting the Poisson mass beyond the support.
double tv_to_shifted_poisson(const LocalPmf& exact, double rate);

}  // namespace hyperrec

#endif  // HYPERREC_STATS_H_
