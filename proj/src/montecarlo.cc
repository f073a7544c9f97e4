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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <thread>

#include "hyperrec/errors.h"
#include "hyperrec/oracle.h"

namespace hyperrec {
namespace {

// Runs body(i) for every replicate index, split into contiguous blocks over
// `threads` workers.
template <typename Body>
void for_each_replicate(std::uint64_t replicates, unsigned threads,
                        Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || replicates < 2 * threads) {
    for (std::uint64_t i = 0; i < replicates; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  const std::uint64_t block = (replicates + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * block;
    const std::uint64_t hi = std::min(replicates, lo + block);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &body] {
      for (std::uint64_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

void summarize(LocalSample& sample) {
  sample.counts.assign(sample.n - sample.k + 1, 0);
  std::vector<double> as_double;
  as_double.reserve(sample.values.size());
  for (std::uint64_t v : sample.values) {
    ++sample.counts[v - 1];
    as_double.push_back(static_cast<double>(v));
  }
  const SampleMoments m = sample_moments(as_double);
  sample.mean = m.mean;
  sample.variance = m.variance;
}

std::uint64_t rounded_label(const Rational& alpha, std::uint64_t n) {
  const BigInt twice =
      2 * alpha.get_num() * BigInt(static_cast<unsigned long>(n)) +
      alpha.get_den();
  BigInt rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(),
             BigInt(2 * alpha.get_den()).get_mpz_t());
  return rounded.get_ui();
}

// P(no success at steps i+1..j) = prod_{m=1}^{theta-1} (i+m) / (j+m).
long double survival(int theta, std::uint64_t i, std::uint64_t j) {
  long double s = 1.0L;
  for (int m = 1; m < theta; ++m) {
    s *= static_cast<long double>(i + m) / static_cast<long double>(j + m);
  }
  return s;
}

// Smallest j in (i, n] with survival(i, j) <= u, or n + 1 when none.
std::uint64_t next_success(int theta, std::uint64_t i, std::uint64_t n,
                           long double u) {
  if (survival(theta, i, n) > u) return n + 1;
  // Invert the approximation ((i + c) / (j + c))^(theta-1) with c = theta/2,
  // then walk to the exact boundary.
  const long double c = theta / 2.0L;
  const long double guess =
      (static_cast<long double>(i) + c) * std::pow(u, -1.0L / (theta - 1)) - c;
  std::uint64_t j = i + 1;
  if (guess >= static_cast<long double>(n)) {
    j = n;
  } else if (guess > static_cast<long double>(j)) {
    j = static_cast<std::uint64_t>(guess);
  }
  while (j < n && survival(theta, i, j) > u) ++j;
  while (j > i + 1 && survival(theta, i, j - 1) <= u) --j;
  return j;
}

}  // namespace

void validate(const SimConfig& config) {
  if (config.theta < 2) {
    throw ParameterError("theta must be at least 2, got " +
                         std::to_string(config.theta));
  }
  if (config.replicates == 0) {
    throw ParameterError("replicates must be at least 1");
  }
  if (config.tracked_vertex && *config.tracked_vertex > config.n) {
    throw ParameterError("tracked vertex " +
                         std::to_string(*config.tracked_vertex) +
                         " exceeds n = " + std::to_string(config.n));
  }
}

std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

LocalSample run_local(const SimConfig& config) {
  validate(config);
  if (!config.tracked_vertex) {
    throw ParameterError("run_local needs a tracked vertex");
  }
  LocalSample sample;
  sample.theta = config.theta;
  sample.n = config.n;
  sample.k = *config.tracked_vertex;
  const std::uint64_t k = sample.k;
  const std::uint64_t n = config.n;

  const int theta = config.theta;
  sample.values.assign(config.replicates, 0);
  for_each_replicate(config.replicates, config.threads, [&](std::uint64_t r) {
    std::mt19937_64 engine(replicate_seed(config.master_seed, r));
    std::uint64_t level = 1;
    std::uint64_t last = k;
    while (last < n) {
      // Uniform on (0, 1].
      const long double u =
          static_cast<long double>((engine() >> 11) + 1) * 0x1p-53L;
      const std::uint64_t next = next_success(theta, last, n, u);
      if (next > n) break;
      ++level;
      last = next;
    }
    sample.values[r] = level;
  });
  summarize(sample);
  return sample;
}

LocalSample run_local_full_tree(const SimConfig& config) {
  validate(config);
  if (!config.tracked_vertex) {
    throw ParameterError("run_local_full_tree needs a tracked vertex");
  }
  LocalSample sample;
  sample.theta = config.theta;
  sample.n = config.n;
  sample.k = *config.tracked_vertex;
  sample.values.assign(config.replicates, 0);
  for_each_replicate(config.replicates, config.threads, [&](std::uint64_t r) {
    TreeState state = init_tree(config.theta);
    DrawSource draws =
        DrawSource::seeded(replicate_seed(config.master_seed, r));
    for (std::uint64_t j = 0; j < config.n; ++j) grow(state, draws);
    sample.values[r] = containment_of(state, sample.k);
  });
  summarize(sample);
  return sample;
}

GlobalSample run_global(const SimConfig& config) {
  validate(config);
  GlobalSample sample;
  sample.theta = config.theta;
  sample.n = config.n;
  sample.x1.assign(config.replicates, 0);
  sample.x2.assign(config.replicates, 0);
  if (config.record_martingale) sample.martingale.resize(config.replicates);
  for_each_replicate(config.replicates, config.threads, [&](std::uint64_t r) {
    TreeState state = init_tree(config.theta);
    DrawSource draws =
        DrawSource::seeded(replicate_seed(config.master_seed, r));
    for (std::uint64_t j = 0; j < config.n; ++j) grow(state, draws);
    sample.x1[r] = state.level_count(1);
    sample.x2[r] = state.level_count(2);
    if (config.record_martingale) sample.martingale[r] = martingale_value(state);
  });

  const double count = static_cast<double>(config.replicates);
  long double s1 = 0, s2 = 0;
  for (std::uint64_t r = 0; r < config.replicates; ++r) {
    s1 += sample.x1[r];
    s2 += sample.x2[r];
  }
  const long double m1 = s1 / count;
  const long double m2 = s2 / count;
  long double v1 = 0, v2 = 0, c12 = 0;
  for (std::uint64_t r = 0; r < config.replicates; ++r) {
    const long double d1 = sample.x1[r] - m1;
    const long double d2 = sample.x2[r] - m2;
    v1 += d1 * d1;
    v2 += d2 * d2;
    c12 += d1 * d2;
  }
  sample.mean1 = static_cast<double>(m1);
  sample.mean2 = static_cast<double>(m2);
  if (config.replicates > 1) {
    sample.var1 = static_cast<double>(v1 / (count - 1));
    sample.var2 = static_cast<double>(v2 / (count - 1));
    sample.cov12 = static_cast<double>(c12 / (count - 1));
  }
  return sample;
}

TestReport martingale_onestep_check(const std::vector<TreeState>& states,
                                    const FactorFn& factors) {
  TestReport rep;
  rep.name = "martingale_onestep";
  rep.reference = "hypergeometric conditional law of recruited level-1 count";
  std::uint64_t mismatches = 0;
  for (const TreeState& state : states) {
    const int theta = state.theta();
    const std::uint64_t age = state.age();
    const auto tau = static_cast<std::int64_t>(age) + theta;
    const std::int64_t s = theta - 1;
    const auto x1 = static_cast<std::int64_t>(state.level_count(1));
    const MartingaleFactors prev = factors(theta, age);
    const MartingaleFactors next = factors(theta, age + 1);
    Rational expected(0);
    for (std::int64_t q = 0; q <= std::min(x1, s); ++q) {
      const Rational w = hypergeom_pmf(tau, x1, 0, s, q, 0);
      expected += w * (next.r * Rational(x1 - q + 1) + next.s);
    }
    const Rational current = prev.r * Rational(x1) + prev.s;
    if (expected != current) ++mismatches;
  }
  rep.statistic = static_cast<double>(mismatches);
  rep.exact_pass = mismatches == 0;
  rep.passed = *rep.exact_pass;
  rep.details["states"] = static_cast<double>(states.size());
  rep.details["mismatches"] = static_cast<double>(mismatches);
  return rep;
}

std::vector<TreeState> seeded_states(int theta, std::uint64_t max_age,
                                     std::uint64_t count,
                                     std::uint64_t master_seed) {
  std::vector<TreeState> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    TreeState state = init_tree(theta);
    DrawSource draws = DrawSource::seeded(replicate_seed(master_seed, c));
    const std::uint64_t age = c % (max_age + 1);
    for (std::uint64_t j = 0; j < age; ++j) grow(state, draws);
    out.push_back(std::move(state));
  }
  return out;
}

TestReport poisson_phase_check(int theta, const Rational& alpha,
                               std::uint64_t n, std::uint64_t replicates,
                               std::uint64_t master_seed, double alpha_level) {
  if (alpha <= 0 || alpha >= 1) {
    throw RegimeError("Poisson phase needs 0 < alpha < 1");
  }
  SimConfig config;
  config.theta = theta;
  config.n = n;
  config.replicates = replicates;
  config.master_seed = master_seed;
  config.tracked_vertex = rounded_label(alpha, n);
  const LocalSample sample = run_local(config);

  const double rate = (theta - 1) * std::log(1.0 / to_double(alpha));
  const std::uint64_t top =
      *std::max_element(sample.values.begin(), sample.values.end()) - 1;
  std::vector<std::uint64_t> observed(top + 1, 0);
  for (std::uint64_t v : sample.values) ++observed[v - 1];
  std::vector<double> probs = poisson_pmf(rate, top);
  double below = 0.0;
  for (std::uint64_t j = 0; j < top; ++j) below += probs[j];
  probs[top] = std::max(0.0, 1.0 - below);

  TestReport rep = chi_square_gof(observed, probs, alpha_level);
  rep.name = "poisson_phase";
  rep.reference = "1 + Poisson((theta-1) ln(1/alpha))";
  rep.details["theta"] = theta;
  rep.details["n"] = static_cast<double>(n);
  rep.details["k"] = static_cast<double>(*config.tracked_vertex);
  rep.details["rate"] = rate;
  rep.details["sample_mean_minus_1"] = sample.mean - 1.0;
  rep.details["regime_alpha"] = to_double(alpha);
  return rep;
}

TestReport subset_uniformity_check(int theta, std::uint64_t tau,
                                   std::uint64_t replicates,
                                   std::uint64_t master_seed) {
  if (theta < 2) throw ParameterError("theta must be at least 2");
  if (tau < static_cast<std::uint64_t>(theta)) {
    throw ParameterError("tau must be at least theta");
  }
  const unsigned s = static_cast<unsigned>(theta - 1);
  std::vector<std::uint64_t> first(s);
  for (unsigned i = 0; i < s; ++i) first[i] = i;
  TreeState base = init_tree(theta, true);
  DrawSource fixed = DrawSource::injected(
      std::vector<std::vector<std::uint64_t>>(tau - theta, first));
  for (std::uint64_t j = 0; j < tau - theta; ++j) grow(base, fixed);

  // Rank subsets in lexicographic order.
  std::map<std::vector<std::uint64_t>, std::size_t> rank;
  std::vector<std::uint64_t> subset = first;
  while (true) {
    const std::size_t next = rank.size();
    rank.emplace(subset, next);
    int i = static_cast<int>(s) - 1;
    while (i >= 0 && subset[i] == tau - s + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (unsigned j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
  }

  std::vector<std::uint64_t> observed(rank.size(), 0);
  for (std::uint64_t r = 0; r < replicates; ++r) {
    TreeState state = base;
    DrawSource draws = DrawSource::seeded(replicate_seed(master_seed, r));
    grow(state, draws);
    std::vector<std::uint64_t> edge = state.edges().back();
    edge.pop_back();
    ++observed[rank.at(edge)];
  }
  const std::vector<double> probs(rank.size(),
                                  1.0 / static_cast<double>(rank.size()));
  TestReport rep = chi_square_gof(observed, probs);
  rep.name = "subset_uniformity";
  rep.reference = "uniform law over C(tau, theta-1) subsets";
  // Largest deviation of any subset frequency in standard errors.
  const double p = probs[0];
  const double se = std::sqrt(p * (1 - p) / static_cast<double>(replicates));
  double worst = 0.0;
  for (std::uint64_t c : observed) {
    worst = std::max(worst, std::abs(static_cast<double>(c) / replicates - p) / se);
  }
  rep.details["max_abs_z"] = worst;
  rep.details["subsets"] = static_cast<double>(rank.size());
  rep.passed = rep.passed && worst <= 5.0;
  return rep;
}

TestReport shortcut_vs_tree_check(int theta, std::uint64_t n, std::uint64_t k,
                                  std::uint64_t replicates,
                                  std::uint64_t master_seed) {
  SimConfig config;
  config.theta = theta;
  config.n = n;
  config.replicates = replicates;
  config.tracked_vertex = k;
  config.master_seed = master_seed;
  const LocalSample tree = run_local_full_tree(config);
  config.master_seed = replicate_seed(master_seed, replicates);
  const LocalSample shortcut = run_local(config);
  TestReport rep = chi_square_two_sample(tree.counts, shortcut.counts);
  rep.name = "shortcut_vs_tree";
  rep.reference = "indicator-sum sampler against full tree growth";
  rep.details["tree_mean"] = tree.mean;
  rep.details["shortcut_mean"] = shortcut.mean;
  return rep;
}

}  // namespace hyperrec
