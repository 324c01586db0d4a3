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

#include <gtest/gtest.h>

#include <vector>

#include "mgn/corekit/bernoulli.hpp"
#include "mgn/corekit/polynomial.hpp"
#include "mgn/corekit/prime_field.hpp"
#include "mgn/corekit/rational.hpp"

namespace mgn {
namespace {

// Coefficients of x / (e^x - 1) by power-series division, times k!.
std::vector<Rational> bernoulli_by_series(unsigned order) {
  std::vector<Rational> denom(order + 1);  // (e^x - 1) / x
  for (unsigned i = 0; i <= order; ++i) denom[i] = Rational(1) / Rational(factorial(i + 1));
  std::vector<Rational> q(order + 1);
  for (unsigned i = 0; i <= order; ++i) {
    Rational acc = i == 0 ? Rational(1) : Rational(0);
    for (unsigned j = 0; j < i; ++j) acc -= q[j] * denom[i - j];
    q[i] = acc / denom[0];
  }
  for (unsigned i = 0; i <= order; ++i) q[i] *= Rational(factorial(i));
  return q;
}

TEST(Rational, SerializesAsNumDen) {
  EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("-3/2"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(falling_factorial(5, 3), 60);
  EXPECT_EQ(falling_factorial(2, 3), 0);
  EXPECT_EQ(ipow(3, 4), 81);
}

TEST(Bernoulli, SmallValues) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(2), make_rational(1, 6));
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
  EXPECT_EQ(bernoulli(5), 0);
}

TEST(Bernoulli, MatchesSeriesDivision) {
  auto series = bernoulli_by_series(20);
  for (unsigned k = 0; k <= 20; ++k) EXPECT_EQ(bernoulli(k), series[k]) << k;
}

TEST(PrimeField, QuadraticCharacter) {
  PrimeField f5(5);
  EXPECT_EQ(f5.chi_table(), (std::vector<std::int8_t>{0, 1, -1, -1, 1}));
  PrimeField f2(2);
  EXPECT_EQ(f2.chi_table(), (std::vector<std::int8_t>{0, 1}));
  PrimeField f7(7);
  int plus = 0;
  for (auto c : f7.chi_table()) plus += c == 1;
  EXPECT_EQ(plus, 3);
}

TEST(PrimeField, ArithmeticAgreesWithDirectEnumeration) {
  for (std::uint32_t p : {2u, 3u, 11u, 101u}) {
    PrimeField f(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      bool square = false;
      for (std::uint32_t x = 1; x < p; ++x) square |= x * x % p == a;
      EXPECT_EQ(f.chi(a), a == 0 ? 0 : (square ? 1 : -1));
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
    }
  }
  EXPECT_THROW(PrimeField(9), std::invalid_argument);
}

TEST(PrimeField, PrimesInRange) {
  EXPECT_EQ(primes_in_range(2, 20), (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_EQ(primes_in_range(2, 199).size(), 46u);
}

TEST(Polynomial, Evaluation) {
  RationalPolynomial sq = RationalPolynomial::monomial(2);
  EXPECT_EQ(sq(Integer(3)), 9);
  EXPECT_EQ(RationalPolynomial()(Integer(1000000)), 0);
  RationalPolynomial half({make_rational(1, 2), make_rational(1, 2)});
  EXPECT_EQ(half(Integer(3)), 2);
  EXPECT_FALSE(half.has_integer_coefficients());
  EXPECT_TRUE(sq.is_monic());
}

TEST(Polynomial, ArithmeticAndTrim) {
  RationalPolynomial a({1, 1});
  RationalPolynomial b({-1, 1});
  auto prod = a * b;
  EXPECT_EQ(prod, RationalPolynomial({-1, 0, 1}));
  EXPECT_EQ((prod - prod).degree(), -1);
  EXPECT_TRUE((prod - prod).is_zero());
  EXPECT_EQ(prod.to_string("p"), "p^2 - 1");
}

}  // namespace
}  // namespace mgn
