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

#include "mgn/census/census.hpp"
#include "mgn/corekit/prime_field.hpp"
#include "mgn/fitlab/fit.hpp"

namespace mgn::fitlab {
namespace {

const CorrectionTables& tables() {
  static const CorrectionTables t;
  return t;
}

std::vector<DataPoint> genus1_points(int n, const std::vector<std::uint32_t>& ps) {
  std::vector<DataPoint> out;
  for (auto p : ps) out.push_back({p, census::census_g1(p, n)[static_cast<std::size_t>(n - 1)].count});
  return out;
}

TEST(Interpolate, Examples) {
  EXPECT_EQ(interpolate({{1, 1}, {2, 4}, {3, 9}}), RationalPolynomial::monomial(2));
  EXPECT_EQ(interpolate({{5, 5}, {7, 7}, {11, 11}}), RationalPolynomial::monomial(1));
  EXPECT_EQ(interpolate({{2, 3}}), RationalPolynomial::constant(3));
  EXPECT_THROW(interpolate({{2, 3}, {2, 4}}), std::invalid_argument);
}

TEST(Fit, ModelBookkeeping) {
  FitModel m{11, {{Correction::kTau, 0}}};
  EXPECT_EQ(m.unknowns(), 13);
  EXPECT_EQ(parse_correction("c18"), Correction::kC18);
  EXPECT_EQ(correction_weight(Correction::kC16), 16);
  EXPECT_THROW(parse_correction("c20"), std::invalid_argument);
  EXPECT_EQ(tables().value(Correction::kTau, 2), -24);
}

TEST(Fit, RejectsBadInput) {
  std::vector<DataPoint> two{{2, 2}, {3, 3}};
  EXPECT_THROW(fit(two, FitModel{2, {}}, tables()), std::invalid_argument);
  std::vector<DataPoint> dup{{2, 2}, {2, 2}, {3, 3}};
  EXPECT_THROW(fit(dup, FitModel{1, {}}, tables()), std::invalid_argument);
}

TEST(Fit, OnePointedGenusOne) {
  auto pts = genus1_points(1, {2, 3});
  auto r = fit(pts, FitModel{1, {}}, tables());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.solution->polynomial, RationalPolynomial::monomial(1));
  EXPECT_TRUE(r.solution->monic);
  EXPECT_TRUE(holdout_validate(r, genus1_points(1, {199}), tables()).pass);
}

TEST(Fit, CorruptedHoldoutNamesThePrime) {
  auto pts = genus1_points(1, {2, 3});
  auto r = fit(pts, FitModel{1, {}}, tables());
  std::vector<DataPoint> hold{{5, 5}, {7, 8}, {11, 11}};
  auto v = holdout_validate(r, hold, tables());
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.failing_primes, std::vector<std::uint32_t>{7});
}

TEST(Fit, GenusOneLowMarkingsAreMonicIntegral) {
  auto ps = primes_in_range(2, 100);
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::uint32_t> f(ps.begin(), ps.begin() + n + 1), h(ps.begin() + n + 1, ps.begin() + n + 4);
    auto r = fit(genus1_points(n, f), FitModel{n, {}}, tables());
    ASSERT_TRUE(r.ok()) << n;
    EXPECT_TRUE(r.solution->monic) << n;
    EXPECT_TRUE(r.solution->integral) << n;
    EXPECT_EQ(r.solution->polynomial.degree(), n);
    EXPECT_TRUE(holdout_validate(r, genus1_points(n, h), tables()).pass) << n;
  }
}

TEST(Fit, ElevenPointsNeedsTau) {
  std::vector<std::uint32_t> f{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  auto pts = genus1_points(11, f);
  auto pure = fit(pts, FitModel{11, {}}, tables());
  ASSERT_FALSE(pure.ok());
  ASSERT_TRUE(pure.certificate.has_value());
  // The certificate is itself inconsistent for the model.
  EXPECT_FALSE(fit(pure.certificate->points, FitModel{11, {}}, tables()).ok());
  auto corrected = fit(pts, FitModel{11, {{Correction::kTau, 0}}}, tables());
  ASSERT_TRUE(corrected.ok());
  EXPECT_EQ(corrected.solution->multipliers.front(), RationalPolynomial::constant(-1));
  EXPECT_TRUE(corrected.solution->monic);
  EXPECT_TRUE(holdout_validate(corrected, genus1_points(11, {43, 47, 53}), tables()).pass);
}

TEST(Fit, RecoversSyntheticCorrection) {
  // value = p^2 + (p - 9) c16(p)
  std::vector<DataPoint> pts;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u}) {
    Rational v = Rational(Integer(p) * p) + Rational((Integer(p) - 9) * tables().value(Correction::kC16, p));
    pts.push_back({p, v});
  }
  auto r = fit(pts, FitModel{2, {{Correction::kC16, 1}}}, tables());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.solution->multipliers.front(), RationalPolynomial({-9, 1}));
  EXPECT_EQ(r.evaluate(19, tables()),
            Rational(Integer(19 * 19)) + Rational(Integer(10) * tables().value(Correction::kC16, 19)));
}

TEST(Genus0, CountPolynomial) {
  EXPECT_EQ(genus0_count_polynomial(3), RationalPolynomial::constant(1));
  EXPECT_EQ(genus0_count_polynomial(5), RationalPolynomial({6, -5, 1}));
  // Configurations of n distinct points on P^1 modulo PGL_2.
  for (int n = 3; n <= 7; ++n) {
    for (long p : {7L, 11L, 13L}) {
      Integer pgl = (Integer(p) * p - 1) * p;
      EXPECT_EQ(genus0_count_polynomial(n)(Integer(p)), make_rational(falling_factorial(p + 1, n), pgl));
    }
  }
}

}  // namespace
}  // namespace mgn::fitlab
