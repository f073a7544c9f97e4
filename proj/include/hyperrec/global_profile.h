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

// Moments of the global profile (X_{n,1}, X_{n,2}): the number of vertices
// contained in exactly one and exactly two hyperedges at age n. Also the
// martingale M_n = r_n X_{n,1} + s_n built from X_{n,1}, its conditional
// variance increments, and the Gaussian-limit parameters.
//
// Exact routines iterate in rationals and are practical up to n of a few
// thousand. The *_float routines iterate the same recurrences in long double
// for convergence checks at large n.

#ifndef HYPERREC_GLOBAL_PROFILE_H_
#define HYPERREC_GLOBAL_PROFILE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hyperrec/growth.h"
#include "hyperrec/rational.h"

namespace hyperrec {

struct MeanVector {
  Rational e1;  // E[X_{n,1}]
  Rational e2;  // E[X_{n,2}]
};

struct GlobalMoments {
  int theta = 0;
  std::uint64_t n = 0;
  Rational e1, e2;         // E[X1], E[X2]
  Rational e11, e12, e22;  // E[X1^2], E[X1 X2], E[X2^2]
};

struct CovMatrix {
  Rational var1, cov12, var2;
};

struct CovMatrixFloat {
  double var1 = 0, cov12 = 0, var2 = 0;
};

struct FloatMoments {
  long double e1 = 0, e2 = 0, e11 = 0, e12 = 0, e22 = 0;
};

// All functions taking theta throw ParameterError when theta < 2.

// E[X1] = n/theta + 1 + (theta-1) g_n,
// E[X2] = (theta-1)/theta^2 (n+theta) + g_n ((theta-1)^2 H_n - (theta-1)/theta),
// with g_n = Gamma(theta) Gamma(n+1) / Gamma(n+theta).
MeanVector mean_closed_form(int theta, std::uint64_t n);

// Iterates E[X1_n] = n/tau E[X1_{n-1}] + 1 and
// E[X2_n] = n/tau E[X2_{n-1}] + (theta-1)/tau E[X1_{n-1}], tau = n+theta-1,
// from (theta, 0).
MeanVector mean_recurrence(int theta, std::uint64_t n);

// Exact first and second moments at every age 0..n_max. With
// tau = n+theta-1, s = theta-1 and d = tau (tau-1), one step maps the age
// n-1 moments to age n by
//   e11 <- n(n-1)/d e11 + n(2n+3 theta-5)/d e1 + 1
//   e12 <- n(n-1)/d e12 + n/tau e2 + n s/d e11 + s(s-1)/d e1
//   e22 <- n(n-1)/d e22 + s(s-1)/d e11 + 2 n s/d e12 + n s/d (e1 + e2)
// together with the two mean recurrences.
std::vector<GlobalMoments> second_moments_trajectory(int theta,
                                                     std::uint64_t n_max);
GlobalMoments second_moments_recurrence(int theta, std::uint64_t n);

// The same recurrences in long double.
FloatMoments second_moments_float(int theta, std::uint64_t n);

CovMatrix exact_cov(const GlobalMoments& m);
CovMatrix exact_cov(int theta, std::uint64_t n);
CovMatrixFloat float_cov(int theta, std::uint64_t n);

// Limits of Cov(X1, X2) / n:
//   var1  = (theta-1)^2 / (theta^2 (2 theta-1))
//   cov12 = -(theta-1)^2 (theta^2+2 theta-1) / (theta^3 (2 theta-1)^2)
//   var2  = (theta-1)^2 (6 theta^4-6 theta^3+8 theta^2-5 theta+1)
//           / (theta^4 (2 theta-1)^3)
CovMatrix asymptotic_cov(int theta);

struct MartingaleFactors {
  std::uint64_t n = 0;
  Rational r;
  Rational s;
};

// r_n = Gamma(n+theta) / (Gamma(theta) Gamma(n+1)),
// s_n = 1 - Gamma(n+theta+1) / (theta Gamma(theta) Gamma(n+1)).
MartingaleFactors martingale_factors(int theta, std::uint64_t n);
// r_0 = 1, s_0 = 0, r_n = (n+theta-1)/n r_{n-1}, s_n = s_{n-1} - r_n.
MartingaleFactors martingale_factors_recurrence(int theta, std::uint64_t n);

// M_n = r_n X_{n,1} + s_n for the given tree.
Rational martingale_value(const TreeState& state);
Rational martingale_value(int theta, std::uint64_t age, std::uint64_t x1);

// E[(M_j - M_{j-1})^2 | state at age j-1]. The increment equals
// (r_j - r_{j-1}) X1 - r_j Q, where Q is the number of level-1 vertices
// recruited at step j, so the term is r_j^2 Var(Q) for the hypergeometric Q.
Rational conditional_variance_term(const TreeState& state);
Rational conditional_variance_term(int theta, std::uint64_t age,
                                   std::uint64_t x1);

// E[sum_{j=1..n} E[(M_j - M_{j-1})^2 | F_{j-1}]], unscaled. Equals
// Var(M_n) = r_n^2 Var(X_{n,1}).
Rational expected_conditional_variance_sum(int theta, std::uint64_t n);
long double expected_conditional_variance_sum_float(int theta,
                                                    std::uint64_t n);

struct CltParams {
  int theta = 0;
  Rational centering_coeff;  // X1 is centered at centering_coeff * n
  Rational limit_variance;   // of (X1 - n/theta) / sqrt(n)
  Rational vn_limit;         // of V_n = (sum of conditional variances) / n^(2 theta - 1)
  Rational gamma_theta_sq;   // Gamma(theta)^2
  double vn_exponent = 0;    // theta - 1/2, V_n is scaled by n^(2 vn_exponent)
  std::string centering;     // "n/theta"
  std::string scale;         // "sqrt(n)"
};

CltParams clt_params(int theta);

// sum_{i=1..n} Gamma(i+alpha) / Gamma(i+beta), term by term and in closed
// form (Gamma(n+alpha+1)/Gamma(n+beta) - Gamma(alpha+1)/Gamma(beta))
// / (alpha-beta+1). Closed form requires beta >= 1 and alpha+1 != beta.
Rational gamma_ratio_sum_direct(std::uint64_t n, std::int64_t alpha,
                                std::int64_t beta);
Rational gamma_ratio_sum_closed(std::uint64_t n, std::int64_t alpha,
                                std::int64_t beta);

// Bounds r_n <= K1 n^(theta-1), |r_n - r_{n-1}| <= K2 n^(theta-2) and
// |s_n - s_{n-1}| <= K3 n^(theta-1) with each K taken as `multiplier` times
// the leading constant of the corresponding asymptotic equivalent
// (1/Gamma(theta), (theta-1)/Gamma(theta), 1/Gamma(theta)).
struct FactorBoundReport {
  Rational k1, k2, k3;
  // Largest n in 1..n_max violating each bound, 0 when none does.
  std::uint64_t last_violation_r = 0;
  std::uint64_t last_violation_dr = 0;
  std::uint64_t last_violation_ds = 0;
  // Largest ratio of each quantity to its power of n over 1..n_max; the
  // smallest constant that makes the bound hold everywhere.
  double sup_ratio_r = 0, sup_ratio_dr = 0, sup_ratio_ds = 0;
};

FactorBoundReport check_factor_bounds(int theta, std::uint64_t n_max,
                                      const Rational& multiplier);

}  // namespace hyperrec

#endif  // HYPERREC_GLOBAL_PROFILE_H_
