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

// Exact and asymptotic combinatorial kernels: rising factorials, signless
// Stirling numbers of the first kind, generalized harmonic numbers, Gamma
// ratios at integer arguments, and two floating-point helpers (digamma and
// the two-term Stirling expansion of a Gamma ratio).
//
// Floating-point results from this header are only ever compared against
// exact ones; they never feed an exact computation.

#ifndef HYPERREC_COMBINATORICS_H_
#define HYPERREC_COMBINATORICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "hyperrec/rational.h"

namespace hyperrec {

// Largest Stirling row (n - k) the exact pmf path accepts unless the caller
// raises it.
inline constexpr unsigned long kDefaultStirlingCap = 2000;

// <x>_m = x (x+1) ... (x+m-1), with <x>_0 = 1.
Rational rising_factorial(const Rational& x, unsigned long m);
BigInt rising_factorial(const BigInt& x, unsigned long m);

// Triangle of signless Stirling numbers of the first kind [m over i] for
// 0 <= i <= m <= max_m, built with
//   [m over i] = [m-1 over i-1] + (m-1) [m-1 over i].
//
// A const table is safe to share between threads. extend() is the only
// mutator and must not race with readers.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_m = 0);

  unsigned max_m() const { return static_cast<unsigned>(rows_.size() - 1); }

  // Throws RangeError unless i <= m <= max_m().
  const BigInt& at(unsigned m, unsigned i) const;
  std::span<const BigInt> row(unsigned m) const;

  // Grows the table to hold at least row `m`. Growth at least doubles the
  // current size so repeated small extensions stay amortized.
  void extend(unsigned m);

 private:
  void append_rows(unsigned target);

  std::vector<std::vector<BigInt>> rows_;
};

BigInt stirling_first(unsigned m, unsigned i, const StirlingTable& table);

// Row m of the triangle computed in O(m) memory, for rows too large to cache.
std::vector<BigInt> stirling_row(unsigned m);

// H_n^{(s)}(x) = sum_{k=1..n} 1 / (k + x)^s, exact. Requires s >= 1, x >= 0.
Rational gen_harmonic(unsigned long n, unsigned s, const Rational& x);

// Floating counterpart summed from the smallest term up, for large n.
double gen_harmonic_float(unsigned long n, unsigned s, double x);

// Gamma(n + a) / Gamma(n + b) as an exact rational by telescoping.
// Throws DomainError unless n + a >= 1 and n + b >= 1.
Rational gamma_ratio_int(std::int64_t n, std::int64_t a, std::int64_t b);

// Two-term expansion x^(a-b) (1 + (a-b)(a+b-1) / (2x)) of
// Gamma(x + a) / Gamma(x + b) for large x. Requires x > 0.
double stirling_gamma_ratio(double x, double a, double b);

// Digamma for x > 0: upward recurrence to x >= 8, then the asymptotic
// series. Absolute error below 1e-10 on [0.5, 1e6].
double digamma(double x);

}  // namespace hyperrec

#endif  // HYPERREC_COMBINATORICS_H_
