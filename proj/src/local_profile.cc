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

#include "hyperrec/local_profile.h"

#include <cmath>
#include <utility>

#include "hyperrec/errors.h"

namespace hyperrec {
namespace {

void check_args(int theta, std::uint64_t n, std::uint64_t k) {
  if (theta < 2) {
    throw ParameterError("theta must be at least 2, got " +
                         std::to_string(theta));
  }
  if (k > n) {
    throw RangeError("vertex label " + std::to_string(k) + " exceeds age " +
                     std::to_string(n));
  }
}

// H_n(x) - H_k(x) for integer offset x, exact.
Rational harmonic_gap(std::uint64_t n, std::uint64_t k, unsigned s, int x) {
  const Rational offset(x);
  return gen_harmonic(n, s, offset) - gen_harmonic(k, s, offset);
}

LocalPmf empty_pmf(int theta, std::uint64_t n, std::uint64_t k) {
  LocalPmf pmf;
  pmf.theta = theta;
  pmf.n = n;
  pmf.k = k;
  return pmf;
}

}  // namespace

Rational exact_mean(int theta, std::uint64_t n, std::uint64_t k) {
  check_args(theta, n, k);
  return 1 + (theta - 1) * harmonic_gap(n, k, 1, theta - 1);
}

Rational exact_variance(int theta, std::uint64_t n, std::uint64_t k) {
  check_args(theta, n, k);
  const Rational b(theta - 1);
  return b * harmonic_gap(n, k, 1, theta - 1) -
         b * b * harmonic_gap(n, k, 2, theta - 1);
}

LocalMoments exact_moments(int theta, std::uint64_t n, std::uint64_t k) {
  return {exact_mean(theta, n, k), exact_variance(theta, n, k)};
}

double mgf(int theta, std::uint64_t n, std::uint64_t k, double t) {
  check_args(theta, n, k);
  // (i+1+(theta-1)e^t)/(i+theta) = 1 + (theta-1)(e^t-1)/(i+theta).
  const double lift = (theta - 1) * std::expm1(t);
  double sum = t;
  double carry = 0.0;
  for (std::uint64_t i = k; i < n; ++i) {
    const double term =
        std::log1p(lift / (static_cast<double>(i) + theta)) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return std::exp(sum);
}

double mgf_gamma_form(int theta, std::uint64_t n, std::uint64_t k, double t) {
  check_args(theta, n, k);
  const double b = (theta - 1) * std::exp(t);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::exp(t + std::lgamma(nd + 1 + b) + std::lgamma(kd + theta) -
                  std::lgamma(nd + theta) - std::lgamma(kd + 1 + b));
}

LocalPmf exact_pmf(int theta, std::uint64_t n, std::uint64_t k,
                   const PmfOptions& options) {
  check_args(theta, n, k);
  const std::uint64_t m = n - k;
  if (m > options.max_support) {
    throw CapacityError("n - k = " + std::to_string(m) +
                        " exceeds the Stirling row cap " +
                        std::to_string(options.max_support));
  }
  std::vector<BigInt> coeffs;
  if (options.table != nullptr && m <= options.table->max_m()) {
    const auto row = options.table->row(static_cast<unsigned>(m));
    coeffs.assign(row.begin(), row.end());
  } else {
    coeffs = stirling_row(static_cast<unsigned>(m));
  }

  // Taylor shift of sum_i coeffs[i] x^i to x = a + y.
  const unsigned long a = static_cast<unsigned long>(k + 1);
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = m; j-- > i;) {
      mpz_addmul_ui(coeffs[j].get_mpz_t(), coeffs[j + 1].get_mpz_t(), a);
    }
  }

  const BigInt denom = rising_factorial(
      BigInt(static_cast<unsigned long>(k + theta)), static_cast<unsigned long>(m));
  LocalPmf pmf = empty_pmf(theta, n, k);
  pmf.probabilities.reserve(m + 1);
  BigInt b_power(1);
  for (std::uint64_t r = 1; r <= m + 1; ++r) {
    pmf.probabilities.push_back(make_rational(b_power * coeffs[r - 1], denom));
    b_power *= theta - 1;
  }
  return pmf;
}

LocalPmf exact_pmf_direct_sum(int theta, std::uint64_t n, std::uint64_t k,
                              const StirlingTable& table) {
  check_args(theta, n, k);
  const unsigned m = static_cast<unsigned>(n - k);
  if (m > table.max_m()) {
    throw CapacityError("Stirling table too small for n - k = " +
                        std::to_string(m));
  }
  const BigInt denom = rising_factorial(
      BigInt(static_cast<unsigned long>(k + theta)), m);
  const BigInt a(static_cast<unsigned long>(k + 1));
  LocalPmf pmf = empty_pmf(theta, n, k);
  for (unsigned r = 1; r <= m + 1; ++r) {
    BigInt sum(0);
    for (unsigned i = r - 1; i <= m; ++i) {
      BigInt a_power;
      mpz_pow_ui(a_power.get_mpz_t(), a.get_mpz_t(), i - r + 1);
      sum += stirling_first(m, i, table) * binomial(i, r - 1) * a_power;
    }
    BigInt b_power;
    mpz_ui_pow_ui(b_power.get_mpz_t(), static_cast<unsigned long>(theta - 1),
                  r - 1);
    pmf.probabilities.push_back(make_rational(b_power * sum, denom));
  }
  return pmf;
}

LocalPmf pmf_oracle_convolution(int theta, std::uint64_t n, std::uint64_t k) {
  check_args(theta, n, k);
  std::vector<Rational> law{Rational(1)};
  for (std::uint64_t i = k + 1; i <= n; ++i) {
    const Rational p = make_rational(
        BigInt(theta - 1), BigInt(static_cast<unsigned long>(i - 1 + theta)));
    const Rational q = 1 - p;
    std::vector<Rational> next(law.size() + 1);
    for (std::size_t j = 0; j < law.size(); ++j) {
      next[j] += law[j] * q;
      next[j + 1] += law[j] * p;
    }
    law = std::move(next);
  }
  LocalPmf pmf = empty_pmf(theta, n, k);
  pmf.probabilities = std::move(law);
  return pmf;
}

RegimeSpec RegimeSpec::fixed(std::uint64_t k) {
  RegimeSpec spec;
  spec.kind = RegimeKind::kFixed;
  spec.fixed_k = k;
  return spec;
}

RegimeSpec RegimeSpec::early(std::string k_of_n) {
  RegimeSpec spec;
  spec.kind = RegimeKind::kEarly;
  spec.k_of_n = std::move(k_of_n);
  return spec;
}

RegimeSpec RegimeSpec::intermediate(const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) {
    throw RegimeError("intermediate regime needs 0 < alpha < 1, got " +
                      to_string(alpha));
  }
  RegimeSpec spec;
  spec.kind = RegimeKind::kIntermediate;
  spec.alpha = alpha;
  return spec;
}

RegimeSpec RegimeSpec::late() {
  RegimeSpec spec;
  spec.kind = RegimeKind::kLate;
  return spec;
}

std::string to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::kFixed: return "fixed";
    case RegimeKind::kEarly: return "early";
    case RegimeKind::kIntermediate: return "intermediate";
    case RegimeKind::kLate: return "late";
  }
  return "unknown";
}

void check_regime(const RegimeSpec& regime, std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw RegimeError("k = " + std::to_string(k) + " exceeds n = " +
                      std::to_string(n));
  }
  switch (regime.kind) {
    case RegimeKind::kFixed:
      if (k != regime.fixed_k) {
        throw RegimeError("fixed regime declared k = " +
                          std::to_string(regime.fixed_k) + " but got k = " +
                          std::to_string(k));
      }
      return;
    case RegimeKind::kEarly:
      if (k < 1 || k >= n) {
        throw RegimeError("early regime needs 1 <= k < n");
      }
      return;
    case RegimeKind::kLate:
      if (k < 1) throw RegimeError("late regime needs k >= 1");
      return;
    case RegimeKind::kIntermediate: {
      if (regime.alpha <= 0 || regime.alpha >= 1) {
        throw RegimeError("intermediate regime needs 0 < alpha < 1");
      }
      // round(alpha n) = floor((2 alpha n + 1) / 2).
      const BigInt twice = 2 * regime.alpha.get_num() *
                               BigInt(static_cast<unsigned long>(n)) +
                           regime.alpha.get_den();
      BigInt rounded;
      mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(),
                 BigInt(2 * regime.alpha.get_den()).get_mpz_t());
      if (rounded != BigInt(static_cast<unsigned long>(k))) {
        throw RegimeError("intermediate regime with alpha = " +
                          to_string(regime.alpha) + " and n = " +
                          std::to_string(n) + " needs k = " +
                          to_string(rounded) + ", got " + std::to_string(k));
      }
      return;
    }
  }
}

double asymptotic_mean(int theta, std::uint64_t n, std::uint64_t k,
                       const RegimeSpec& regime) {
  if (theta < 2) throw ParameterError("theta must be at least 2");
  check_regime(regime, n, k);
  const double b = theta - 1;
  const double nd = static_cast<double>(n);
  switch (regime.kind) {
    case RegimeKind::kFixed:
      if (n < 1) throw RegimeError("fixed regime needs n >= 1");
      return b * (std::log(nd) - digamma(b) - 1.0 / b) + 1.0 -
             b * gen_harmonic_float(k, 1, b);
    case RegimeKind::kEarly:
    case RegimeKind::kLate:
      return b * std::log(nd / static_cast<double>(k)) + 1.0;
    case RegimeKind::kIntermediate:
      return b * std::log(1.0 / to_double(regime.alpha)) + 1.0;
  }
  return 0.0;
}

std::string to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::kNormal: return "normal";
    case LimitKind::kShiftedPoisson: return "shifted_poisson";
    case LimitKind::kPointMass: return "point_mass";
  }
  return "unknown";
}

double LimitLaw::center_at(std::uint64_t n, std::uint64_t k) const {
  if (kind != LimitKind::kNormal) return 0.0;
  const double nd = static_cast<double>(n);
  if (regime == RegimeKind::kFixed) return (theta - 1) * std::log(nd);
  return (theta - 1) * std::log(nd / static_cast<double>(k));
}

double LimitLaw::scale_at(std::uint64_t n, std::uint64_t k) const {
  if (kind != LimitKind::kNormal) return 1.0;
  const double nd = static_cast<double>(n);
  if (regime == RegimeKind::kFixed) return std::sqrt(std::log(nd));
  return std::sqrt(std::log(nd / static_cast<double>(k)));
}

LimitLaw limit_law(const RegimeSpec& regime, int theta) {
  if (theta < 2) throw ParameterError("theta must be at least 2");
  LimitLaw law;
  law.regime = regime.kind;
  law.theta = theta;
  switch (regime.kind) {
    case RegimeKind::kFixed:
      law.kind = LimitKind::kNormal;
      law.variance = theta - 1;
      law.shift = 0.0;
      law.centering = "(theta-1)*ln(n)";
      law.scale = "sqrt(ln(n))";
      break;
    case RegimeKind::kEarly:
      law.kind = LimitKind::kNormal;
      law.variance = theta - 1;
      law.shift = 0.0;
      law.centering = "(theta-1)*ln(n/k)";
      law.scale = "sqrt(ln(n/k))";
      break;
    case RegimeKind::kIntermediate:
      if (regime.alpha <= 0 || regime.alpha >= 1) {
        throw RegimeError("intermediate regime needs 0 < alpha < 1");
      }
      law.kind = LimitKind::kShiftedPoisson;
      law.rate = (theta - 1) * std::log(1.0 / to_double(regime.alpha));
      law.shift = 1.0;
      law.centering = "1";
      law.scale = "1";
      break;
    case RegimeKind::kLate:
      law.kind = LimitKind::kPointMass;
      law.shift = 1.0;
      law.centering = "0";
      law.scale = "1";
      break;
  }
  return law;
}

}  // namespace hyperrec
