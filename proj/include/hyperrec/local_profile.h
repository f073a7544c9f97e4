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

// Law of C_{n,k}, the containment level at age n of the vertex labeled k.
// C_{n,k} - 1 is a sum of independent indicators, the i-th being the event
// that vertex k is recruited at step i (k < i <= n).

#ifndef HYPERREC_LOCAL_PROFILE_H_
#define HYPERREC_LOCAL_PROFILE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hyperrec/combinatorics.h"
#include "hyperrec/rational.h"

namespace hyperrec {

struct LocalPmf {
  int theta = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  // probabilities[r - 1] = P(C_{n,k} = r) for r = 1..n-k+1.
  std::vector<Rational> probabilities;

  std::uint64_t support_max() const { return probabilities.size(); }
  const Rational& at(std::uint64_t r) const { return probabilities.at(r - 1); }
};

struct LocalMoments {
  Rational mean;
  Rational variance;
};

// All functions below throw ParameterError for theta < 2 and RangeError for
// k > n.
Rational exact_mean(int theta, std::uint64_t n, std::uint64_t k);
Rational exact_variance(int theta, std::uint64_t n, std::uint64_t k);
LocalMoments exact_moments(int theta, std::uint64_t n, std::uint64_t k);

// Product form of the moment generating function, accumulated in log space.
double mgf(int theta, std::uint64_t n, std::uint64_t k, double t);
// The same function written with Gamma functions, via std::lgamma.
double mgf_gamma_form(int theta, std::uint64_t n, std::uint64_t k, double t);

struct PmfOptions {
  // Largest accepted n - k.
  std::uint64_t max_support = kDefaultStirlingCap;
  // Optional shared table; rows beyond it are built on the fly.
  const StirlingTable* table = nullptr;
};

// Exact pmf from the Stirling-number formula
//   P(C = r) = (theta-1)^(r-1) / <k+theta>_{n-k}
//              * sum_{i=r-1}^{n-k} [n-k over i] C(i, r-1) (k+1)^(i-r+1).
// The inner sums for all r are the Taylor coefficients of
// sum_i [n-k over i] x^i at x = k+1, obtained by repeated synthetic
// division. Throws CapacityError when n - k > options.max_support.
LocalPmf exact_pmf(int theta, std::uint64_t n, std::uint64_t k,
                   const PmfOptions& options = {});

// Evaluates the Stirling-number sum term by term for each r. Quadratic in
// n - k per entry; used as a cross-check of exact_pmf on small rows.
LocalPmf exact_pmf_direct_sum(int theta, std::uint64_t n, std::uint64_t k,
                              const StirlingTable& table);

// Independent route: convolves the indicator laws one step at a time. Uses
// no Stirling numbers.
LocalPmf pmf_oracle_convolution(int theta, std::uint64_t n, std::uint64_t k);

enum class RegimeKind { kFixed, kEarly, kIntermediate, kLate };

// How k relates to n asymptotically. Declared by the caller; a single
// (n, k) pair cannot determine it.
struct RegimeSpec {
  RegimeKind kind = RegimeKind::kFixed;
  std::uint64_t fixed_k = 0;      // kFixed
  std::string k_of_n;             // kEarly, free-form, e.g. "ceil(n^(3/4))"
  Rational alpha;                 // kIntermediate, 0 < alpha < 1

  static RegimeSpec fixed(std::uint64_t k);
  static RegimeSpec early(std::string k_of_n);
  // Throws RegimeError unless 0 < alpha < 1.
  static RegimeSpec intermediate(const Rational& alpha);
  static RegimeSpec late();
};

std::string to_string(RegimeKind kind);

// Checks that (n, k) can belong to the regime:
//   fixed:        k equals the declared k;
//   early, late:  1 <= k <= n (early additionally k < n);
//   intermediate: k == round(alpha * n), ties away from zero.
// Throws RegimeError otherwise.
void check_regime(const RegimeSpec& regime, std::uint64_t n, std::uint64_t k);

// Leading terms plus constant of E[C_{n,k}]:
//   fixed k:      (theta-1)(ln n - psi(theta-1) - 1/(theta-1)) + 1
//                 - (theta-1) H_k(theta-1)
//   early, late:  (theta-1) ln(n/k) + 1
//   intermediate: (theta-1) ln(1/alpha) + 1
double asymptotic_mean(int theta, std::uint64_t n, std::uint64_t k,
                       const RegimeSpec& regime);

enum class LimitKind { kNormal, kShiftedPoisson, kPointMass };

struct LimitLaw {
  LimitKind kind = LimitKind::kPointMass;
  RegimeKind regime = RegimeKind::kLate;
  int theta = 0;
  double variance = 0.0;  // kNormal
  double rate = 0.0;      // kShiftedPoisson
  double shift = 1.0;     // kShiftedPoisson, kPointMass
  std::string centering;  // subtracted term, e.g. "(theta-1)*ln(n)"
  std::string scale;      // divisor, e.g. "sqrt(ln(n))"

  // Numeric centering and scale for a concrete (n, k); identity (0, 1) for
  // the non-Gaussian laws.
  double center_at(std::uint64_t n, std::uint64_t k) const;
  double scale_at(std::uint64_t n, std::uint64_t k) const;
};

std::string to_string(LimitKind kind);

// Throws ParameterError for theta < 2.
LimitLaw limit_law(const RegimeSpec& regime, int theta);

}  // namespace hyperrec

#endif  // HYPERREC_LOCAL_PROFILE_H_
