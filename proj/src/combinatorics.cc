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

#include "hyperrec/combinatorics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperrec/errors.h"

namespace hyperrec {

Rational rising_factorial(const Rational& x, unsigned long m) {
  Rational out(1);
  Rational term = x;
  for (unsigned long j = 0; j < m; ++j) {
    out *= term;
    term += 1;
  }
  return out;
}

BigInt rising_factorial(const BigInt& x, unsigned long m) {
  BigInt out(1);
  BigInt term = x;
  for (unsigned long j = 0; j < m; ++j) {
    out *= term;
    ++term;
  }
  return out;
}

StirlingTable::StirlingTable(unsigned max_m) {
  rows_.push_back({BigInt(1)});
  append_rows(max_m);
}

const BigInt& StirlingTable::at(unsigned m, unsigned i) const {
  if (m > max_m() || i > m) {
    throw RangeError("Stirling index (" + std::to_string(m) + ", " +
                     std::to_string(i) + ") outside table of order " +
                     std::to_string(max_m()));
  }
  return rows_[m][i];
}

std::span<const BigInt> StirlingTable::row(unsigned m) const {
  if (m > max_m()) {
    throw RangeError("Stirling row " + std::to_string(m) +
                     " outside table of order " + std::to_string(max_m()));
  }
  return rows_[m];
}

void StirlingTable::extend(unsigned m) {
  if (m <= max_m()) return;
  append_rows(std::max(m, 2 * max_m()));
}

void StirlingTable::append_rows(unsigned target) {
  rows_.reserve(static_cast<std::size_t>(target) + 1);
  for (unsigned m = max_m() + 1; m <= target; ++m) {
    const auto& prev = rows_[m - 1];
    std::vector<BigInt> row(m + 1);
    row[0] = 0;
    for (unsigned i = 1; i < m; ++i) {
      row[i] = prev[i];
      row[i] *= (m - 1);
      row[i] += prev[i - 1];
    }
    row[m] = 1;
    rows_.push_back(std::move(row));
  }
}

BigInt stirling_first(unsigned m, unsigned i, const StirlingTable& table) {
  return table.at(m, i);
}

std::vector<BigInt> stirling_row(unsigned m) {
  std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
  row[0] = 1;
  for (unsigned j = 1; j <= m; ++j) {
    // Row j from row j-1 in place, high index first.
    row[j] = row[j - 1];
    for (unsigned i = j - 1; i >= 1; --i) {
      mpz_mul_ui(row[i].get_mpz_t(), row[i].get_mpz_t(), j - 1);
      mpz_add(row[i].get_mpz_t(), row[i].get_mpz_t(), row[i - 1].get_mpz_t());
    }
    row[0] = 0;
  }
  return row;
}

Rational gen_harmonic(unsigned long n, unsigned s, const Rational& x) {
  if (s == 0) throw DomainError("harmonic order must be positive");
  if (x < 0) throw DomainError("harmonic offset must be nonnegative");
  Rational sum(0);
  for (unsigned long k = 1; k <= n; ++k) {
    Rational base = x + k;
    sum += 1 / pow(base, s);
  }
  return sum;
}

double gen_harmonic_float(unsigned long n, unsigned s, double x) {
  if (s == 0) throw DomainError("harmonic order must be positive");
  if (x < 0) throw DomainError("harmonic offset must be nonnegative");
  double sum = 0.0;
  double carry = 0.0;
  for (unsigned long k = n; k >= 1; --k) {
    const double term = std::pow(static_cast<double>(k) + x, -static_cast<double>(s));
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

Rational gamma_ratio_int(std::int64_t n, std::int64_t a, std::int64_t b) {
  const std::int64_t top = n + a;
  const std::int64_t bottom = n + b;
  if (top < 1 || bottom < 1) {
    throw DomainError("Gamma ratio with nonpositive argument: Gamma(" +
                      std::to_string(top) + ") / Gamma(" +
                      std::to_string(bottom) + ")");
  }
  BigInt product(1);
  const std::int64_t lo = std::min(top, bottom);
  const std::int64_t hi = std::max(top, bottom);
  for (std::int64_t j = lo; j < hi; ++j) product *= static_cast<unsigned long>(j);
  if (top >= bottom) return Rational(product);
  return make_rational(BigInt(1), product);
}

double stirling_gamma_ratio(double x, double a, double b) {
  if (!(x > 0.0)) throw DomainError("Stirling ratio needs x > 0");
  return std::pow(x, a - b) * (1.0 + (a - b) * (a + b - 1.0) / (2.0 * x));
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma needs x > 0");
  double shift = 0.0;
  while (x < 8.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // -sum_k B_{2k} / (2k x^{2k}) for k = 1..7, nested in 1/x^2.
  const double series =
      inv2 * (-1.0 / 12 +
      inv2 * (1.0 / 120 +
      inv2 * (-1.0 / 252 +
      inv2 * (1.0 / 240 +
      inv2 * (-1.0 / 132 +
      inv2 * (691.0 / 32760 +
      inv2 * (-1.0 / 12)))))));
  return shift + std::log(x) - 0.5 * inv + series;
}

}  // namespace hyperrec
