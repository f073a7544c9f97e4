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

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>
#include <string>

#include "hyperrec/errors.h"

namespace hyperrec {

double chi_square_sf(double x, double dof) {
  if (dof <= 0) throw DomainError("chi-square needs positive degrees of freedom");
  if (x <= 0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double kolmogorov_sf(double lambda) {
  if (lambda <= 0.0) return 1.0;
  // Small lambda: the alternating series converges slowly but the tail is
  // then indistinguishable from 1.
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-17) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestReport chi_square_gof(std::span<const std::uint64_t> observed,
                          std::span<const double> probabilities,
                          double alpha) {
  if (observed.size() != probabilities.size()) {
    throw DomainError("observed and probability vectors differ in length");
  }
  const double total = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  if (total <= 0) throw DegenerateTestError("chi-square with no observations");

  std::vector<double> obs_groups;
  std::vector<double> exp_groups;
  double obs_acc = 0.0;
  double exp_acc = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    obs_acc += static_cast<double>(observed[i]);
    exp_acc += total * probabilities[i];
    if (exp_acc >= kMinExpectedPerBin) {
      obs_groups.push_back(obs_acc);
      exp_groups.push_back(exp_acc);
      obs_acc = 0.0;
      exp_acc = 0.0;
    }
  }
  if (obs_acc > 0.0 || exp_acc > 0.0) {
    if (exp_groups.empty()) {
      obs_groups.push_back(obs_acc);
      exp_groups.push_back(exp_acc);
    } else {
      obs_groups.back() += obs_acc;
      exp_groups.back() += exp_acc;
    }
  }
  if (exp_groups.size() < 2) {
    throw DegenerateTestError("chi-square needs at least two merged bins, got " +
                              std::to_string(exp_groups.size()));
  }
  double stat = 0.0;
  for (std::size_t g = 0; g < exp_groups.size(); ++g) {
    const double diff = obs_groups[g] - exp_groups[g];
    stat += diff * diff / exp_groups[g];
  }
  TestReport rep;
  rep.name = "chi_square_gof";
  rep.statistic = stat;
  rep.dof = static_cast<std::int64_t>(exp_groups.size()) - 1;
  rep.p_value = chi_square_sf(stat, static_cast<double>(*rep.dof));
  rep.passed = *rep.p_value > alpha;
  rep.details["bins"] = static_cast<double>(exp_groups.size());
  rep.details["total"] = total;
  rep.details["alpha"] = alpha;
  return rep;
}

TestReport chi_square_gof(std::span<const std::uint64_t> observed,
                          const LocalPmf& exact, double alpha) {
  std::vector<double> probs;
  probs.reserve(exact.probabilities.size());
  for (const auto& p : exact.probabilities) probs.push_back(to_double(p));
  TestReport rep = chi_square_gof(observed, probs, alpha);
  rep.reference = "exact_pmf(theta=" + std::to_string(exact.theta) +
                  ", n=" + std::to_string(exact.n) +
                  ", k=" + std::to_string(exact.k) + ")";
  return rep;
}

TestReport chi_square_two_sample(std::span<const std::uint64_t> first,
                                 std::span<const std::uint64_t> second,
                                 double alpha) {
  if (first.size() != second.size()) {
    throw DomainError("two-sample chi-square needs matching cells");
  }
  const double total_a = static_cast<double>(
      std::accumulate(first.begin(), first.end(), std::uint64_t{0}));
  const double total_b = static_cast<double>(
      std::accumulate(second.begin(), second.end(), std::uint64_t{0}));
  if (total_a <= 0 || total_b <= 0) {
    throw DegenerateTestError("two-sample chi-square with an empty sample");
  }
  const double share_a = total_a / (total_a + total_b);
  const double share_b = 1.0 - share_a;

  std::vector<double> a_groups, b_groups;
  double a_acc = 0.0, b_acc = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    a_acc += static_cast<double>(first[i]);
    b_acc += static_cast<double>(second[i]);
    const double pooled = a_acc + b_acc;
    if (pooled * std::min(share_a, share_b) >= kMinExpectedPerBin) {
      a_groups.push_back(a_acc);
      b_groups.push_back(b_acc);
      a_acc = b_acc = 0.0;
    }
  }
  if (a_acc > 0.0 || b_acc > 0.0) {
    if (a_groups.empty()) {
      a_groups.push_back(a_acc);
      b_groups.push_back(b_acc);
    } else {
      a_groups.back() += a_acc;
      b_groups.back() += b_acc;
    }
  }
  if (a_groups.size() < 2) {
    throw DegenerateTestError("two-sample chi-square needs at least two bins");
  }
  double stat = 0.0;
  for (std::size_t g = 0; g < a_groups.size(); ++g) {
    const double pooled = a_groups[g] + b_groups[g];
    const double ea = pooled * share_a;
    const double eb = pooled * share_b;
    stat += (a_groups[g] - ea) * (a_groups[g] - ea) / ea +
            (b_groups[g] - eb) * (b_groups[g] - eb) / eb;
  }
  TestReport rep;
  rep.name = "chi_square_two_sample";
  rep.statistic = stat;
  rep.dof = static_cast<std::int64_t>(a_groups.size()) - 1;
  rep.p_value = chi_square_sf(stat, static_cast<double>(*rep.dof));
  rep.passed = *rep.p_value > alpha;
  rep.details["bins"] = static_cast<double>(a_groups.size());
  rep.details["alpha"] = alpha;
  return rep;
}

KsResult ks_standard_normal(std::vector<double> sample) {
  if (sample.empty()) throw InsufficientSampleError("KS test on empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = normal_cdf(sample[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  const double root = std::sqrt(n);
  return {d, kolmogorov_sf((root + 0.12 + 0.11 / root) * d)};
}

SampleMoments sample_moments(std::span<const double> sample) {
  SampleMoments m;
  m.count = sample.size();
  if (sample.empty()) return m;
  long double sum = 0;
  for (double x : sample) sum += x;
  const long double mean = sum / sample.size();
  long double m2 = 0, m3 = 0, m4 = 0;
  for (double x : sample) {
    const long double d = x - mean;
    const long double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const long double n = static_cast<long double>(sample.size());
  m.mean = static_cast<double>(mean);
  if (sample.size() > 1) m.variance = static_cast<double>(m2 / (n - 1));
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 > 0) {
    m.skewness = static_cast<double>(m3 / std::pow(m2, 1.5L));
    m.excess_kurtosis = static_cast<double>(m4 / (m2 * m2) - 3);
  }
  return m;
}

TestReport normality_check(std::span<const double> standardized,
                           const NormalityGates& gates) {
  if (standardized.size() < kMinNormalitySample) {
    throw InsufficientSampleError(
        "normality check needs at least 1000 values, got " +
        std::to_string(standardized.size()));
  }
  const SampleMoments m = sample_moments(standardized);
  const KsResult ks = ks_standard_normal(
      std::vector<double>(standardized.begin(), standardized.end()));
  TestReport rep;
  rep.name = "normality_check";
  rep.statistic = ks.d;
  rep.p_value = ks.p_value;
  rep.passed = std::abs(m.skewness) <= gates.max_abs_skew &&
               std::abs(m.excess_kurtosis) <= gates.max_abs_excess_kurtosis &&
               ks.p_value > gates.alpha;
  rep.details["count"] = static_cast<double>(m.count);
  rep.details["mean"] = m.mean;
  rep.details["variance"] = m.variance;
  rep.details["skewness"] = m.skewness;
  rep.details["excess_kurtosis"] = m.excess_kurtosis;
  rep.details["ks_d"] = ks.d;
  rep.details["max_abs_skew"] = gates.max_abs_skew;
  rep.details["max_abs_excess_kurtosis"] = gates.max_abs_excess_kurtosis;
  rep.details["alpha"] = gates.alpha;
  return rep;
}

TestReport moment_ztest(double sample_mean, double exact_mean,
                        double exact_variance, std::uint64_t replicates,
                        double z_max) {
  if (replicates < 30) {
    throw InsufficientSampleError("moment z-test needs at least 30 replicates");
  }
  if (exact_variance < 0) throw DomainError("negative variance");
  TestReport rep;
  rep.name = "moment_ztest";
  rep.details["sample_mean"] = sample_mean;
  rep.details["exact_mean"] = exact_mean;
  rep.details["replicates"] = static_cast<double>(replicates);
  if (exact_variance == 0.0) {
    rep.exact_pass = sample_mean == exact_mean;
    rep.passed = *rep.exact_pass;
    rep.statistic = 0.0;
    return rep;
  }
  const double se = std::sqrt(exact_variance / static_cast<double>(replicates));
  const double z = (sample_mean - exact_mean) / se;
  rep.statistic = z;
  rep.p_value = std::erfc(std::abs(z) / std::sqrt(2.0));
  rep.passed = std::abs(z) <= z_max;
  rep.details["standard_error"] = se;
  rep.details["z_max"] = z_max;
  return rep;
}

std::vector<double> poisson_pmf(double rate, std::uint64_t k_max) {
  if (rate < 0) throw DomainError("Poisson rate must be nonnegative");
  std::vector<double> out(k_max + 1);
  double p = std::exp(-rate);
  for (std::uint64_t j = 0; j <= k_max; ++j) {
    out[j] = p;
    p *= rate / static_cast<double>(j + 1);
  }
  return out;
}

double tv_to_shifted_poisson(const LocalPmf& exact, double rate) {
  const std::uint64_t m = exact.probabilities.size();
  const std::vector<double> poi = poisson_pmf(rate, m - 1);
  double diff = 0.0;
  double covered = 0.0;
  for (std::uint64_t j = 0; j < m; ++j) {
    diff += std::abs(to_double(exact.probabilities[j]) - poi[j]);
    covered += poi[j];
  }
  return 0.5 * (diff + std::max(0.0, 1.0 - covered));
}

}  // namespace hyperrec
