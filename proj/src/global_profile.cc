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

#include "hyperrec/global_profile.h"

#include <cmath>
#include <string>

#include "hyperrec/combinatorics.h"
#include "hyperrec/errors.h"

namespace hyperrec {
namespace {

void check_theta(int theta) {
  if (theta < 2) {
    throw ParameterError("theta must be at least 2, got " +
                         std::to_string(theta));
  }
}

BigInt factorial(unsigned long m) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
  return make_rational(BigInt(static_cast<unsigned long>(num)),
                       BigInt(static_cast<unsigned long>(den)));
}

// Gamma(theta) Gamma(n+1) / Gamma(n+theta).
Rational g_factor(int theta, std::uint64_t n) {
  return Rational(factorial(theta - 1)) *
         gamma_ratio_int(static_cast<std::int64_t>(n), 1, theta);
}

}  // namespace

MeanVector mean_closed_form(int theta, std::uint64_t n) {
  check_theta(theta);
  const Rational th(theta);
  const Rational s(theta - 1);
  const Rational g = g_factor(theta, n);
  const Rational nn(static_cast<unsigned long>(n));
  MeanVector out;
  out.e1 = nn / th + 1 + s * g;
  out.e2 = s / (th * th) * (nn + th) +
           g * (s * s * gen_harmonic(n, 1, Rational(0)) - s / th);
  return out;
}

MeanVector mean_recurrence(int theta, std::uint64_t n) {
  check_theta(theta);
  MeanVector m{Rational(theta), Rational(0)};
  for (std::uint64_t j = 1; j <= n; ++j) {
    const std::uint64_t tau = j + theta - 1;
    const Rational shrink = ratio(j, tau);
    const Rational e1 = shrink * m.e1 + 1;
    const Rational e2 = shrink * m.e2 + ratio(theta - 1, tau) * m.e1;
    m.e1 = e1;
    m.e2 = e2;
  }
  return m;
}

std::vector<GlobalMoments> second_moments_trajectory(int theta,
                                                     std::uint64_t n_max) {
  check_theta(theta);
  std::vector<GlobalMoments> out;
  out.reserve(n_max + 1);
  GlobalMoments m;
  m.theta = theta;
  m.n = 0;
  m.e1 = theta;
  m.e2 = 0;
  m.e11 = theta * theta;
  m.e12 = 0;
  m.e22 = 0;
  out.push_back(m);
  const std::uint64_t s = theta - 1;
  for (std::uint64_t j = 1; j <= n_max; ++j) {
    const std::uint64_t tau = j + theta - 1;
    const std::uint64_t d = tau * (tau - 1);
    const Rational keep = ratio(j * (j - 1), d);
    const Rational shrink = ratio(j, tau);
    const Rational pair = ratio(s * (s - 1), d);
    const Rational js = ratio(j * s, d);
    GlobalMoments next;
    next.theta = theta;
    next.n = j;
    next.e1 = shrink * m.e1 + 1;
    next.e2 = shrink * m.e2 + ratio(s, tau) * m.e1;
    next.e11 = keep * m.e11 + ratio(j * (2 * j + 3 * theta - 5), d) * m.e1 + 1;
    next.e12 = keep * m.e12 + shrink * m.e2 + js * m.e11 + pair * m.e1;
    next.e22 = keep * m.e22 + pair * m.e11 + 2 * js * m.e12 +
               js * (m.e1 + m.e2);
    m = std::move(next);
    out.push_back(m);
  }
  return out;
}

GlobalMoments second_moments_recurrence(int theta, std::uint64_t n) {
  return second_moments_trajectory(theta, n).back();
}

FloatMoments second_moments_float(int theta, std::uint64_t n) {
  check_theta(theta);
  FloatMoments m;
  m.e1 = theta;
  m.e11 = static_cast<long double>(theta) * theta;
  const long double s = theta - 1;
  for (std::uint64_t j = 1; j <= n; ++j) {
    const long double jj = static_cast<long double>(j);
    const long double tau = jj + theta - 1;
    const long double d = tau * (tau - 1);
    const long double keep = jj * (jj - 1) / d;
    const long double shrink = jj / tau;
    const long double pair = s * (s - 1) / d;
    const long double js = jj * s / d;
    FloatMoments next;
    next.e1 = shrink * m.e1 + 1;
    next.e2 = shrink * m.e2 + s / tau * m.e1;
    next.e11 = keep * m.e11 + jj * (2 * jj + 3 * theta - 5) / d * m.e1 + 1;
    next.e12 = keep * m.e12 + shrink * m.e2 + js * m.e11 + pair * m.e1;
    next.e22 = keep * m.e22 + pair * m.e11 + 2 * js * m.e12 +
               js * (m.e1 + m.e2);
    m = next;
  }
  return m;
}

CovMatrix exact_cov(const GlobalMoments& m) {
  return {m.e11 - m.e1 * m.e1, m.e12 - m.e1 * m.e2, m.e22 - m.e2 * m.e2};
}

CovMatrix exact_cov(int theta, std::uint64_t n) {
  return exact_cov(second_moments_recurrence(theta, n));
}

CovMatrixFloat float_cov(int theta, std::uint64_t n) {
  const FloatMoments m = second_moments_float(theta, n);
  CovMatrixFloat out;
  out.var1 = static_cast<double>(m.e11 - m.e1 * m.e1);
  out.cov12 = static_cast<double>(m.e12 - m.e1 * m.e2);
  out.var2 = static_cast<double>(m.e22 - m.e2 * m.e2);
  return out;
}

CovMatrix asymptotic_cov(int theta) {
  check_theta(theta);
  const Rational t(theta);
  const Rational s2 = (t - 1) * (t - 1);
  const Rational w = 2 * t - 1;
  CovMatrix out;
  out.var1 = s2 / (t * t * w);
  out.cov12 = -s2 * (t * t + 2 * t - 1) / (t * t * t * w * w);
  out.var2 = s2 * (6 * t * t * t * t - 6 * t * t * t + 8 * t * t - 5 * t + 1) /
             (t * t * t * t * w * w * w);
  return out;
}

MartingaleFactors martingale_factors(int theta, std::uint64_t n) {
  check_theta(theta);
  const auto nn = static_cast<std::int64_t>(n);
  const Rational gamma_theta(factorial(theta - 1));
  MartingaleFactors out;
  out.n = n;
  out.r = gamma_ratio_int(nn, theta, 1) / gamma_theta;
  out.s = 1 - gamma_ratio_int(nn, theta + 1, 1) / (theta * gamma_theta);
  return out;
}

MartingaleFactors martingale_factors_recurrence(int theta, std::uint64_t n) {
  check_theta(theta);
  MartingaleFactors out{0, Rational(1), Rational(0)};
  for (std::uint64_t j = 1; j <= n; ++j) {
    out.r *= ratio(j + theta - 1, j);
    out.s -= out.r;
    out.n = j;
  }
  return out;
}

Rational martingale_value(int theta, std::uint64_t age, std::uint64_t x1) {
  const MartingaleFactors f = martingale_factors(theta, age);
  return f.r * Rational(BigInt(static_cast<unsigned long>(x1))) + f.s;
}

Rational martingale_value(const TreeState& state) {
  return martingale_value(state.theta(), state.age(), state.level_count(1));
}

Rational conditional_variance_term(int theta, std::uint64_t age,
                                   std::uint64_t x1) {
  check_theta(theta);
  const std::uint64_t tau = age + theta;
  if (x1 > tau) {
    throw RangeError("level-1 count " + std::to_string(x1) +
                     " exceeds vertex count " + std::to_string(tau));
  }
  const std::uint64_t s = theta - 1;
  const Rational r = martingale_factors(theta, age + 1).r;
  // Var(Q) = s x (tau - x)(tau - s) / (tau^2 (tau - 1)).
  const BigInt num = BigInt(static_cast<unsigned long>(s)) *
                     BigInt(static_cast<unsigned long>(x1)) *
                     BigInt(static_cast<unsigned long>(tau - x1)) *
                     BigInt(static_cast<unsigned long>(tau - s));
  const BigInt den = BigInt(static_cast<unsigned long>(tau)) *
                     BigInt(static_cast<unsigned long>(tau)) *
                     BigInt(static_cast<unsigned long>(tau - 1));
  return r * r * make_rational(num, den);
}

Rational conditional_variance_term(const TreeState& state) {
  return conditional_variance_term(state.theta(), state.age(),
                                   state.level_count(1));
}

Rational expected_conditional_variance_sum(int theta, std::uint64_t n) {
  check_theta(theta);
  if (n == 0) return Rational(0);
  const auto traj = second_moments_trajectory(theta, n - 1);
  const std::uint64_t s = theta - 1;
  Rational sum(0);
  Rational r(1);
  for (std::uint64_t j = 1; j <= n; ++j) {
    r *= ratio(j + theta - 1, j);
    const GlobalMoments& m = traj[j - 1];
    const std::uint64_t tau = j - 1 + theta;
    const Rational tt(BigInt(static_cast<unsigned long>(tau)));
    // E[X (tau - X)] at age j-1.
    const Rational spread = tt * m.e1 - m.e11;
    sum += r * r * ratio(s * (tau - s), 1) * spread / (tt * tt * (tt - 1));
  }
  return sum;
}

long double expected_conditional_variance_sum_float(int theta,
                                                    std::uint64_t n) {
  check_theta(theta);
  const long double s = theta - 1;
  long double e1 = theta;
  long double e11 = static_cast<long double>(theta) * theta;
  long double r = 1;
  long double sum = 0;
  long double carry = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    const long double jj = static_cast<long double>(j);
    const long double tau = jj - 1 + theta;
    r *= (jj + theta - 1) / jj;
    const long double term =
        r * r * s * (tau - s) * (tau * e1 - e11) / (tau * tau * (tau - 1)) -
        carry;
    const long double next_sum = sum + term;
    carry = (next_sum - sum) - term;
    sum = next_sum;
    // Advance the moments from age j-1 to age j.
    const long double t1 = jj + theta - 1;
    const long double d = t1 * (t1 - 1);
    const long double next_e11 =
        jj * (jj - 1) / d * e11 + jj * (2 * jj + 3 * theta - 5) / d * e1 + 1;
    e1 = jj / t1 * e1 + 1;
    e11 = next_e11;
  }
  return sum;
}

CltParams clt_params(int theta) {
  check_theta(theta);
  CltParams p;
  p.theta = theta;
  p.centering_coeff = make_rational(1, theta);
  p.limit_variance = asymptotic_cov(theta).var1;
  const BigInt g = factorial(theta - 1);
  p.gamma_theta_sq = Rational(g * g);
  p.vn_limit = p.limit_variance / p.gamma_theta_sq;
  p.vn_exponent = theta - 0.5;
  p.centering = "n/theta";
  p.scale = "sqrt(n)";
  return p;
}

Rational gamma_ratio_sum_direct(std::uint64_t n, std::int64_t alpha,
                                std::int64_t beta) {
  Rational sum(0);
  for (std::uint64_t i = 1; i <= n; ++i) {
    sum += gamma_ratio_int(static_cast<std::int64_t>(i), alpha, beta);
  }
  return sum;
}

Rational gamma_ratio_sum_closed(std::uint64_t n, std::int64_t alpha,
                                std::int64_t beta) {
  if (beta < 1) throw DomainError("closed form needs beta >= 1");
  if (alpha + 1 == beta) throw DomainError("closed form needs alpha + 1 != beta");
  const auto nn = static_cast<std::int64_t>(n);
  return (gamma_ratio_int(nn, alpha + 1, beta) -
          gamma_ratio_int(0, alpha + 1, beta)) /
         Rational(alpha - beta + 1);
}

FactorBoundReport check_factor_bounds(int theta, std::uint64_t n_max,
                                      const Rational& multiplier) {
  check_theta(theta);
  const Rational gamma_theta(factorial(theta - 1));
  FactorBoundReport rep;
  rep.k1 = multiplier / gamma_theta;
  rep.k2 = multiplier * (theta - 1) / gamma_theta;
  rep.k3 = multiplier / gamma_theta;
  Rational r_prev(1);
  Rational r(1);
  for (std::uint64_t j = 1; j <= n_max; ++j) {
    r = r_prev * ratio(j + theta - 1, j);
    const Rational nn(BigInt(static_cast<unsigned long>(j)));
    const Rational p1 = pow(nn, static_cast<unsigned long>(theta - 1));
    const Rational p2 = pow(nn, static_cast<unsigned long>(theta - 2));
    const Rational dr = abs(r - r_prev);
    // |s_j - s_{j-1}| = r_j.
    if (r > rep.k1 * p1) rep.last_violation_r = j;
    if (dr > rep.k2 * p2) rep.last_violation_dr = j;
    if (r > rep.k3 * p1) rep.last_violation_ds = j;
    rep.sup_ratio_r = std::max(rep.sup_ratio_r, to_double(r / p1));
    rep.sup_ratio_dr = std::max(rep.sup_ratio_dr, to_double(dr / p2));
    rep.sup_ratio_ds = rep.sup_ratio_r;
    r_prev = r;
  }
  return rep;
}

}  // namespace hyperrec
