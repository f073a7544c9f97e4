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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "hyperrec/errors.h"

namespace hyperrec {
namespace {

// Counts permutations of {0..m-1} by number of cycles.
std::vector<long> cycle_counts_by_enumeration(int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long> counts(m + 1, 0);
  do {
    std::vector<bool> seen(m, false);
    int cycles = 0;
    for (int start = 0; start < m; ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (int v = start; !seen[v]; v = perm[v]) seen[v] = true;
    }
    ++counts[cycles];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

TEST(RisingFactorial, EmptyProductIsOne) {
  EXPECT_EQ(rising_factorial(Rational(5), 0), 1);
}

TEST(RisingFactorial, SmallValues) {
  EXPECT_EQ(rising_factorial(Rational(3), 2), 12);
  EXPECT_EQ(rising_factorial(Rational(2), 3), 24);
  EXPECT_EQ(rising_factorial(BigInt(2), 3), 24);
  EXPECT_EQ(rising_factorial(make_rational(1, 2), 2), make_rational(3, 4));
}

TEST(RisingFactorial, MatchesStirlingExpansionAtTwo) {
  StirlingTable table(3);
  Rational sum(0);
  for (unsigned i = 0; i <= 3; ++i) sum += Rational(table.at(3, i)) * pow(Rational(2), i);
  EXPECT_EQ(sum, 24);
}

TEST(StirlingTable, SpotValues) {
  StirlingTable table(4);
  EXPECT_EQ(stirling_first(1, 1, table), 1);
  EXPECT_EQ(stirling_first(3, 2, table), 3);
  EXPECT_EQ(stirling_first(4, 1, table), 6);
  EXPECT_EQ(stirling_first(0, 0, table), 1);
  EXPECT_EQ(stirling_first(4, 0, table), 0);
}

TEST(StirlingTable, MatchesCycleCountsOfPermutations) {
  StirlingTable table(7);
  for (int m = 1; m <= 7; ++m) {
    const auto counts = cycle_counts_by_enumeration(m);
    for (int i = 0; i <= m; ++i) {
      EXPECT_EQ(table.at(m, i), counts[i]) << "m=" << m << " i=" << i;
    }
  }
}

TEST(StirlingTable, OutOfRangeThrows) {
  StirlingTable table(5);
  EXPECT_THROW(table.at(6, 1), RangeError);
  EXPECT_THROW(table.at(3, 4), RangeError);
  EXPECT_THROW(table.row(6), RangeError);
}

TEST(StirlingTable, RowSumsAreFactorials) {
  StirlingTable table(60);
  BigInt fact(1);
  for (unsigned m = 0; m <= 60; ++m) {
    if (m > 0) fact *= m;
    BigInt sum(0);
    for (const auto& entry : table.row(m)) sum += entry;
    EXPECT_EQ(sum, fact) << "m=" << m;
    if (m >= 1) {
      EXPECT_EQ(table.at(m, 0), 0);
    }
    EXPECT_EQ(table.at(m, m), 1);
  }
}

TEST(StirlingTable, GeneratingFunctionIdentity) {
  StirlingTable table(25);
  for (unsigned m = 0; m <= 25; ++m) {
    for (int x = -3; x <= 3; ++x) {
      const Rational xr(x);
      Rational sum(0);
      Rational power(1);
      for (unsigned i = 0; i <= m; ++i) {
        sum += Rational(table.at(m, i)) * power;
        power *= xr;
      }
      EXPECT_EQ(rising_factorial(xr, m), sum) << "m=" << m << " x=" << x;
    }
  }
}

TEST(StirlingTable, ExtendGrowsAndKeepsValues) {
  StirlingTable table(3);
  const BigInt before = table.at(3, 2);
  table.extend(10);
  EXPECT_GE(table.max_m(), 10u);
  EXPECT_EQ(table.at(3, 2), before);
  StirlingTable direct(table.max_m());
  for (unsigned m = 0; m <= table.max_m(); ++m) {
    for (unsigned i = 0; i <= m; ++i) EXPECT_EQ(table.at(m, i), direct.at(m, i));
  }
  table.extend(11);  // small requests at least double
  EXPECT_GE(table.max_m(), 20u);
}

TEST(StirlingRow, MatchesTable) {
  StirlingTable table(40);
  for (unsigned m : {0u, 1u, 2u, 7u, 40u}) {
    const auto row = stirling_row(m);
    ASSERT_EQ(row.size(), m + 1);
    for (unsigned i = 0; i <= m; ++i) EXPECT_EQ(row[i], table.at(m, i));
  }
}

TEST(GenHarmonic, SmallValues) {
  EXPECT_EQ(gen_harmonic(0, 1, Rational(2)), 0);
  EXPECT_EQ(gen_harmonic(2, 1, Rational(2)), make_rational(7, 12));
  EXPECT_EQ(gen_harmonic(2, 2, Rational(0)), make_rational(5, 4));
}

TEST(GenHarmonic, Telescoping) {
  for (unsigned s = 1; s <= 3; ++s) {
    for (const Rational& x : {Rational(0), Rational(2), make_rational(1, 3)}) {
      for (unsigned long n = 1; n <= 30; ++n) {
        EXPECT_EQ(gen_harmonic(n, s, x) - gen_harmonic(n - 1, s, x),
                  1 / pow(x + n, s));
      }
    }
  }
}

TEST(GenHarmonic, FloatMatchesExact) {
  for (unsigned s = 1; s <= 2; ++s) {
    const double exact = to_double(gen_harmonic(500, s, Rational(2)));
    EXPECT_NEAR(gen_harmonic_float(500, s, 2.0), exact, 1e-14);
  }
}

TEST(GenHarmonic, NegativeOffsetRejected) {
  EXPECT_THROW(gen_harmonic(3, 1, Rational(-1)), DomainError);
  EXPECT_THROW(gen_harmonic(3, 0, Rational(1)), DomainError);
}

TEST(GammaRatioInt, SmallValues) {
  EXPECT_EQ(gamma_ratio_int(5, 0, 0), 1);
  EXPECT_EQ(gamma_ratio_int(2, 3, 1), 12);
  // Gamma(4)/Gamma(2) = 6; with theta = 3, r_1 = 6 / Gamma(3) = 3.
  EXPECT_EQ(gamma_ratio_int(1, 3, 1), 6);
  EXPECT_EQ(gamma_ratio_int(1, 3, 1) / 2, 3);
  EXPECT_EQ(gamma_ratio_int(2, 1, 3), make_rational(1, 12));
}

TEST(GammaRatioInt, ReciprocalPairs) {
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t a = 1; a <= 5; ++a) {
      for (std::int64_t b = 1; b <= 5; ++b) {
        EXPECT_EQ(gamma_ratio_int(n, a, b) * gamma_ratio_int(n, b, a), 1);
      }
    }
  }
}

TEST(GammaRatioInt, NonpositiveArgumentThrows) {
  EXPECT_THROW(gamma_ratio_int(0, 0, 1), DomainError);
  EXPECT_THROW(gamma_ratio_int(2, -3, 1), DomainError);
}

TEST(StirlingGammaRatio, Identities) {
  EXPECT_DOUBLE_EQ(stirling_gamma_ratio(100, 2, 2), 1.0);
  EXPECT_DOUBLE_EQ(stirling_gamma_ratio(100, 1, 0), 100.0);
  EXPECT_THROW(stirling_gamma_ratio(0, 1, 0), DomainError);
}

TEST(StirlingGammaRatio, CloseToExactAtFifty) {
  const double exact = to_double(gamma_ratio_int(50, 3, 1));
  EXPECT_LT(std::abs(stirling_gamma_ratio(50, 3, 1) / exact - 1), 1e-3);
}

TEST(StirlingGammaRatio, RelativeErrorDecaysQuadratically) {
  // |approx/exact - 1| * x^2 stays below a constant fitted once on this
  // grid (the scaled error rises toward 2 from below).
  constexpr double kFrozenBound = 2.0;
  for (std::int64_t x : {10, 100, 1000, 10000}) {
    const double exact = to_double(gamma_ratio_int(x, 3, 1));
    const double err = std::abs(stirling_gamma_ratio(x, 3, 1) / exact - 1);
    EXPECT_LE(err * x * x, kFrozenBound) << "x=" << x;
  }
}

TEST(Digamma, KnownValues) {
  const double euler = 0.57721566490153286;
  EXPECT_NEAR(digamma(1.0), -euler, 1e-12);
  EXPECT_NEAR(digamma(2.0), digamma(1.0) + 1.0, 1e-12);
  EXPECT_NEAR(digamma(0.5), -euler - 2 * std::log(2.0), 1e-12);
  const double x = 1e-6;
  EXPECT_NEAR(-digamma(x) - 1 / x, euler, 1e-5);
}

TEST(Digamma, MatchesHarmonicLimit) {
  // psi(1) = lim H_n - ln n; the gap is about 1/(2n).
  const double n = 1e6;
  const double approx = gen_harmonic_float(1000000, 1, 0.0) - std::log(n) - 0.5 / n;
  EXPECT_NEAR(-digamma(1.0), approx, 1e-10);
}

TEST(Digamma, MatchesHarmonicDifferences) {
  // psi(m + 1) = -gamma + H_m for integer m.
  const double euler = 0.57721566490153286;
  for (unsigned long m : {1ul, 7ul, 50ul, 1000ul, 100000ul}) {
    EXPECT_NEAR(digamma(m + 1.0), -euler + gen_harmonic_float(m, 1, 0.0), 1e-10);
  }
}

TEST(Digamma, NonpositiveThrows) {
  EXPECT_THROW(digamma(0.0), DomainError);
  EXPECT_THROW(digamma(-1.5), DomainError);
}

}  // namespace
}  // namespace hyperrec
