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

// Arbitrary-precision integers and rationals. All exact quantities in the
// library (moments, probabilities, martingale values) are carried as
// `Rational`, which GMP keeps in lowest terms with a positive denominator.

#ifndef HYPERREC_RATIONAL_H_
#define HYPERREC_RATIONAL_H_

#include <gmpxx.h>

#include <string>

namespace hyperrec {

using BigInt = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

// Parses "a", "-a/b" or a decimal-free fraction string.
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const BigInt& z) { return z.get_str(10); }
// "num/den", or just "num" when den == 1.
std::string to_string(const Rational& q);

// Integer power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned long exponent);

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace hyperrec

#endif  // HYPERREC_RATIONAL_H_
