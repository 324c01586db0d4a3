// Copyright 2026 The mgn Authors
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

#ifndef MGN_COREKIT_RATIONAL_HPP_
#define MGN_COREKIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mgn {

using Integer = mpz_class;

// Exact rational number in lowest terms with positive denominator. All
// arithmetic operators come from gmpxx and keep the value canonical.
using Rational = mpq_class;

// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

// Canonical "num/den" serialization; integers render as "k/1".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

Integer ipow(const Integer& base, unsigned long exponent);
Integer ipow(long base, unsigned long exponent);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// n * (n-1) * ... * (n-k+1); zero once a factor reaches zero.
Integer falling_factorial(long n, unsigned long k);

}  // namespace mgn

#endif  // MGN_COREKIT_RATIONAL_HPP_
