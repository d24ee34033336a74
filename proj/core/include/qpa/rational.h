// Copyright 2026 The QPA Calculator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPA_RATIONAL_H
#define QPA_RATIONAL_H

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qpa {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a/b", "a" or a decimal literal such as "-0.125" or "2.5e-3".
/// Decimals are converted exactly (0.1 becomes 1/10).
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational &x);

double to_double(const Rational &x);

/// x^e for e >= 0.
Rational power(const Rational &x, unsigned long e);

/// a (a+1) ... (a+m-1); empty product for m == 0.
Rational rising(const Rational &a, long m);

/// a (a-1) ... (a-m+1); empty product for m == 0.
Rational falling(const Rational &a, long m);

Integer binomial(long n, long k);

Integer factorial(long n);

/// Number of size-k multisets drawn from d kinds.
Integer multiset_count(long d, long k);

}  // namespace qpa

#endif
