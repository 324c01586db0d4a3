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

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "mgn/census/cache.hpp"
#include "mgn/census/census.hpp"
#include "mgn/census/curves.hpp"
#include "mgn/census/oracle.hpp"

namespace mgn::census {
namespace {

std::uint64_t brute_long(const WeierstrassLong& e, std::uint32_t p) {
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      std::uint64_t lhs = (y * y + e.a1 * x * y + e.a3 * y) % p;
      std::uint64_t rhs = (x * x * x + e.a2 * x * x + e.a4 * x + e.a6) % p;
      n += lhs == rhs;
    }
  return n;
}

// sum over isomorphism classes of (E, q), q != O, of 1 / #Aut(E, q), with
// E : y^2 = x^3 + ax + b, Aut(E) = {u : u^4 a = a, u^6 b = b} acting on
// points by (x, y) -> (u^2 x, u^3 y).
Rational pairs_by_orbits(std::uint32_t p) {
  auto pw = [&](std::uint64_t u, int e) {
    std::uint64_t r = 1;
    while (e--) r = r * u % p;
    return r;
  };
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  Rational total = 0;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      if ((4 * a * a * a + 27 * b * b) % p == 0 || seen.count({a, b})) continue;
      std::vector<std::uint64_t> aut;
      for (std::uint64_t u = 1; u < p; ++u) {
        seen.insert({pw(u, 4) * a % p, pw(u, 6) * b % p});
        if (pw(u, 4) * a % p == a && pw(u, 6) * b % p == b) aut.push_back(u);
      }
      std::set<std::pair<std::uint64_t, std::uint64_t>> done;
      for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y) {
          if ((y * y) % p != (x * x * x + a * x + b) % p || done.count({x, y})) continue;
          int stab = 0;
          for (auto u : aut) {
            std::pair<std::uint64_t, std::uint64_t> img{pw(u, 2) * x % p, pw(u, 3) * y % p};
            done.insert(img);
            stab += img == std::make_pair(x, y);
          }
          total += make_rational(1, stab);
        }
    }
  return total;
}

TEST(Curves, ShortFormPointCounts) {
  PrimeField f5(5), f7(7);
  EXPECT_EQ(count_points_g1(WeierstrassShort{1, 0}, f5), 4u);
  EXPECT_EQ(count_points_g1(WeierstrassShort{0, 1}, f7), 12u);
  EXPECT_FALSE(is_nonsingular(WeierstrassShort{0, 0}, f7));
}

TEST(Curves, LongFormMatchesEnumeration) {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (std::uint32_t code = 0; code < p * p * p * p * p; ++code) {
      std::uint32_t c = code;
      WeierstrassLong e;
      e.a1 = c % p, c /= p;
      e.a2 = c % p, c /= p;
      e.a3 = c % p, c /= p;
      e.a4 = c % p, c /= p;
      e.a6 = c % p;
      if (!is_nonsingular(e, f)) continue;
      std::uint64_t n = count_points_g1(e, f);
      EXPECT_EQ(n, brute_long(e, p));
      if (p == 2) {
        EXPECT_LE(n, 5u);
      }
    }
  }
}

TEST(Curves, SexticPointCountsMatchOracle) {
  std::mt19937 rng(12345);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 300; ++trial) {
      BinarySextic s;
      for (auto& c : s.c) c = rng() % p;
      if (!is_squarefree(s, f)) continue;
      std::int64_t n = 0;
      for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t v = 0, xp = 1;
        for (int i = 0; i <= 6; ++i) {
          v = (v + s.c[i] * xp) % p;
          xp = xp * x % p;
        }
        n += 1 + f.chi(static_cast<std::uint32_t>(v));
      }
      n += s.c[6] ? 1 + f.chi(s.c[6]) : 1;
      std::uint64_t got = count_points_g2(s, f);
      EXPECT_EQ(got, static_cast<std::uint64_t>(n));
      EXPECT_LE(got, 2 * p + 2);
    }
  }
  PrimeField f5(5);
  BinarySextic x6z6;
  x6z6.c = {1, 0, 0, 0, 0, 0, 1};
  std::int64_t want = 0;
  for (std::uint32_t x = 0; x < 5; ++x) want += 1 + f5.chi((x * x * x * x * x * x + 1) % 5);
  want += 1 + f5.chi(1);
  EXPECT_EQ(count_points_g2(x6z6, f5), static_cast<std::uint64_t>(want));
  BinarySextic nonres;
  nonres.c = {1, 0, 0, 0, 0, 0, 2};  // 2 is a non-residue mod 5
  std::int64_t affine = 0;
  for (std::uint32_t x = 0; x < 5; ++x) affine += 1 + f5.chi((2 * x * x * x * x * x * x + 1) % 5);
  EXPECT_EQ(count_points_g2(nonres, f5), static_cast<std::uint64_t>(affine));
}

TEST(CensusG1, ModuliOfOnePointedCurves) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 101u, 199u}) {
    EXPECT_EQ(census_g1(p, 1).front().count, Rational(p)) << p;
  }
}

TEST(CensusG1, NoSixPointedCurvesOverF2) {
  EXPECT_EQ(census_g1(2, 6)[5].count, 0);
}

TEST(CensusG1, TwoPointedMatchesOrbitEnumeration) {
  for (std::uint32_t p : {7u, 11u}) EXPECT_EQ(census_g1(p, 2)[1].count, pairs_by_orbits(p)) << p;
}

TEST(CensusG1, LongAndShortFormsAgree) {
  for (std::uint32_t p : {5u, 7u}) {
    auto s = census_g1(p, 6, 1, G1Model::kShort);
    auto l = census_g1(p, 6, 1, G1Model::kLong);
    for (int i = 0; i < 6; ++i) EXPECT_EQ(s[i].count, l[i].count) << p << " n=" << i + 1;
    EXPECT_EQ(s[0].method, kMethodG1Short);
    EXPECT_EQ(l[0].method, kMethodG1Long);
  }
  EXPECT_THROW(census_g1(3, 1, 1, G1Model::kShort), std::invalid_argument);
}

TEST(CensusG2, FullAndReducedEnumerationAgree) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto full = census_g2(p, 6, 1, G2Enumeration::kFull);
    auto red = census_g2(p, 6, 1, G2Enumeration::kReduced);
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(full[n].count, red[n].count) << p << " n=" << n;
  }
}

TEST(CensusG2, OrbitOracleMatchesGroupoidCount) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto orbits = g2_orbit_count(p);
    EXPECT_EQ(orbits.groupoid, census_g2(p, 0).front().count) << p;
    EXPECT_EQ(orbits.groupoid, Rational(Integer(p) * p * p));
  }
  EXPECT_THROW(g2_orbit_count(11), std::invalid_argument);
}

TEST(CensusG2, CountsFromHistogram) {
  auto h = g2_histogram(5);
  Integer one = 0, two = 0;
  for (std::size_t N = 0; N < h.models_with_points.size(); ++N) {
    one += Integer(static_cast<unsigned long>(h.models_with_points[N])) * static_cast<unsigned long>(N);
    if (N >= 2) two += Integer(static_cast<unsigned long>(h.models_with_points[N])) * static_cast<unsigned long>(N * (N - 1));
  }
  EXPECT_EQ(g2_count_from_histogram(h, 1), make_rational(one, h.group_order));
  EXPECT_EQ(g2_count_from_histogram(h, 2), make_rational(two, h.group_order));
  EXPECT_EQ(g2_count_from_histogram(h, 13), 0);
  EXPECT_THROW(census_g2(2, 1), std::invalid_argument);
}

TEST(CensusThreads, RowsIndependentOfThreadCount) {
  for (std::uint32_t p : {2u, 3u, 29u, 31u}) {
    auto a = census_g1(p, 11, 1);
    for (unsigned t : {2u, 4u, 8u}) EXPECT_EQ(census_g1(p, 11, t), a);
  }
  EXPECT_EQ(census_g2(13, 4, 1), census_g2(13, 4, 3));
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mgn-cache-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CacheTest, CsvRoundTrip) {
  CensusRecord r{2, 3, 7, make_rational(-5, 3), kMethodG2Sextic, "1"};
  EXPECT_EQ(to_csv_row(r), "2,3,7,-5,3,g2-binary-sextic,1");
  EXPECT_EQ(parse_csv_row(to_csv_row(r)), r);
  EXPECT_THROW(parse_csv_row("1,2,3"), std::invalid_argument);
  EXPECT_THROW(parse_csv_row("1,2,x,1,1,m,1"), std::invalid_argument);
}

TEST_F(CacheTest, PersistsSortedRows) {
  {
    CensusCache c(dir_);
    c.ensure_g1(7, 3, 1);
    c.ensure_g1(5, 3, 1);
  }
  std::ifstream in(dir_ / kCacheFileName);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, kCacheHeader);
  CensusCache again(dir_);
  ASSERT_EQ(again.rows().size(), 6u);
  EXPECT_EQ(again.rows().front().p, 5u);
  EXPECT_EQ(again.find(1, 1, 7)->count, 7);
  EXPECT_TRUE(again.has_range(1, 5, 1, 3));
  EXPECT_FALSE(again.has_range(1, 5, 1, 4));
}

TEST_F(CacheTest, AppendOnlyAndVersioned) {
  CensusCache c(dir_);
  c.ensure_g1(5, 2, 1);
  auto before = c.rows();
  c.put(census_g1(5, 2, 1));
  EXPECT_EQ(c.rows(), before);
  CensusCache v2(dir_, "2");
  EXPECT_FALSE(v2.find(1, 1, 5).has_value());
  v2.ensure_g1(5, 1, 1);
  CensusCache reread(dir_);
  EXPECT_EQ(reread.rows().size(), 3u);
  EXPECT_EQ(reread.find(1, 1, 5)->version, "1");
}

TEST_F(CacheTest, RejectsForeignHeader) {
  std::filesystem::create_directories(dir_);
  std::ofstream(dir_ / kCacheFileName) << "a,b,c\n";
  EXPECT_THROW(CensusCache c(dir_), std::invalid_argument);
}

}  // namespace
}  // namespace mgn::census
